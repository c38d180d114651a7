//! Operators on the arc space: the reversal permutation `P`, the
//! arc-reversal walk transition matrix `U`, the Bass–Hashimoto
//! non-backtracking matrix `T` and the positive support `S⁺(U)`.
//!
//! Rows and columns are indexed by the arcs of an [`ArcSystem`]. `U` follows
//! the column convention `U[wx, uv] = 2/d(v) - [u = x]` when `v = w`, and
//! `T[uv, wx] = 1` when `v = w` and `u ≠ x`, so that `T = D_inᵀ D_out - P`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::arcspace::{build_incidences, column_span_contains, kernel_l_for};
use crate::error::WalkError;
use crate::exact::{
    min_poly, poly_divides, rat, ratio, squarefree_analysis, RatMatrix, RatPoly, Rational,
};
use crate::graph::{ArcSystem, Graph};
use crate::graph6::to_graph6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkOperators {
    pub p: RatMatrix,
    pub u: RatMatrix,
    pub t: RatMatrix,
    pub s_plus_u: RatMatrix,
}

pub fn build_walk_operators(g: &Graph, arcs: &ArcSystem) -> Result<WalkOperators, WalkError> {
    let size = arcs.num_arcs();
    if size == 0 {
        return Err(WalkError::NoEdges);
    }
    let indicator = |b: bool| if b { Rational::one() } else { Rational::zero() };
    let p = RatMatrix::from_fn(size, size, |i, j| indicator(arcs.reverse(j) == i));
    let u = RatMatrix::from_fn(size, size, |row, col| {
        let (w, x) = arcs.arc(row);
        let (uu, v) = arcs.arc(col);
        if v != w {
            return Rational::zero();
        }
        let coin = ratio(2, g.degree(v) as i64);
        if uu == x {
            coin - Rational::one()
        } else {
            coin
        }
    });
    let t = RatMatrix::from_fn(size, size, |row, col| {
        let (uu, v) = arcs.arc(row);
        let (w, x) = arcs.arc(col);
        indicator(v == w && uu != x)
    });
    let s_plus_u = RatMatrix::from_fn(size, size, |i, j| indicator(u[(i, j)] > Rational::zero()));
    Ok(WalkOperators { p, u, t, s_plus_u })
}

/// Outcome of one exact identity check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum IdentityOutcome {
    Holds,
    Violated,
    Skipped { reason: String },
}

impl IdentityOutcome {
    fn from_bool(ok: bool) -> Self {
        if ok {
            IdentityOutcome::Holds
        } else {
            IdentityOutcome::Violated
        }
    }

    fn skipped(reason: &str) -> Self {
        IdentityOutcome::Skipped {
            reason: reason.to_string(),
        }
    }

    pub fn is_violated(&self) -> bool {
        matches!(self, IdentityOutcome::Violated)
    }

    pub fn holds(&self) -> bool {
        matches!(self, IdentityOutcome::Holds)
    }
}

/// Identity name to outcome, in name order.
pub type IdentityReport = BTreeMap<String, IdentityOutcome>;

/// Checks the incidence and walk identities that apply to `g`.
///
/// Identities involving `S⁺(U)` need minimum degree 2 (a degree-1 vertex
/// makes the reversal coefficient `2/1 - 1` positive); the `(2/k)` matrix
/// formula for `U` needs a regular graph. Inapplicable identities are
/// reported as skipped.
pub fn operator_identity_suite(g: &Graph, arcs: &ArcSystem) -> IdentityReport {
    let mut out = IdentityReport::new();
    let mut put = |name: &str, outcome: IdentityOutcome| {
        out.insert(name.to_string(), outcome);
    };
    let inc = build_incidences(g, arcs);
    let din = &inc.din_x;
    let dout = &inc.dout_x;
    let degree_matrix = RatMatrix::from_fn(g.n(), g.n(), |i, j| {
        if i == j {
            rat(g.degree(i) as i64)
        } else {
            Rational::zero()
        }
    });
    put(
        "din_dout_t_eq_adjacency",
        IdentityOutcome::from_bool(din.mul(&dout.transpose()) == inc.adjacency),
    );
    put(
        "din_din_t_eq_degree",
        IdentityOutcome::from_bool(din.mul(&din.transpose()) == degree_matrix),
    );
    put(
        "dout_dout_t_eq_degree",
        IdentityOutcome::from_bool(dout.mul(&dout.transpose()) == degree_matrix),
    );

    let ops = match build_walk_operators(g, arcs) {
        Ok(ops) => ops,
        Err(_) => {
            for name in [
                "din_p_eq_dout",
                "dout_p_eq_din",
                "p_squared_eq_identity",
                "ptp_eq_dout_t_din_minus_p",
                "s_plus_u_formula",
                "ptp_eq_s_plus_u",
                "u_orthogonal",
                "u_regular_formula",
                "l_invariant_under_t",
                "l_invariant_under_u",
            ] {
                put(name, IdentityOutcome::skipped("graph has no edges"));
            }
            return out;
        }
    };
    let p = &ops.p;
    put(
        "din_p_eq_dout",
        IdentityOutcome::from_bool(&din.mul(p) == dout),
    );
    put(
        "dout_p_eq_din",
        IdentityOutcome::from_bool(&dout.mul(p) == din),
    );
    put(
        "p_squared_eq_identity",
        IdentityOutcome::from_bool(p.mul(p).is_identity() && p.transpose() == *p),
    );
    let dt_t_dh_minus_p = dout.transpose().mul(din).sub(p);
    let ptp = p.mul(&ops.t).mul(p);
    put(
        "ptp_eq_dout_t_din_minus_p",
        IdentityOutcome::from_bool(ptp == dt_t_dh_minus_p),
    );
    if g.min_degree() >= 2 {
        put(
            "s_plus_u_formula",
            IdentityOutcome::from_bool(ops.s_plus_u == dt_t_dh_minus_p),
        );
        put(
            "ptp_eq_s_plus_u",
            IdentityOutcome::from_bool(ptp == ops.s_plus_u),
        );
    } else {
        let reason = "minimum degree below 2";
        put("s_plus_u_formula", IdentityOutcome::skipped(reason));
        put("ptp_eq_s_plus_u", IdentityOutcome::skipped(reason));
    }
    put(
        "u_orthogonal",
        IdentityOutcome::from_bool(ops.u.mul(&ops.u.transpose()).is_identity()),
    );
    match g.regular_valency() {
        Some(k) if k >= 1 => {
            let formula = dout.transpose().mul(din).scale(&ratio(2, k as i64)).sub(p);
            put(
                "u_regular_formula",
                IdentityOutcome::from_bool(formula == ops.u),
            );
        }
        _ => put(
            "u_regular_formula",
            IdentityOutcome::skipped("graph is not regular"),
        ),
    }
    let l = kernel_l_for(g, arcs).vectors;
    put(
        "l_invariant_under_t",
        IdentityOutcome::from_bool(column_span_contains(&l, &ops.t.mul(&l))),
    );
    put(
        "l_invariant_under_u",
        IdentityOutcome::from_bool(column_span_contains(&l, &ops.u.mul(&l))),
    );
    out
}

/// A polynomial to look for as a repeated factor, with a display name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Candidate {
    pub name: String,
    pub poly: RatPoly,
}

impl Candidate {
    pub fn new(poly: RatPoly) -> Self {
        Candidate {
            name: poly.to_string(),
            poly,
        }
    }

    /// `x^2 + 2` and `x^2 + x + 2`.
    pub fn defaults() -> Vec<Candidate> {
        vec![
            Candidate::new(RatPoly::from_i64(&[2, 0, 1])),
            Candidate::new(RatPoly::from_i64(&[2, 1, 1])),
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemisimplicityReport {
    pub graph6: String,
    pub min_poly: RatPoly,
    pub is_semisimple: bool,
    pub repeated_part: RatPoly,
    /// Names of the candidates `q` with `q^2` dividing the minimal polynomial.
    pub matched_candidates: Vec<String>,
    pub min_degree: usize,
    pub regular_valency: Option<usize>,
}

/// Minimal polynomial of `T`, its squarefree part test, and which candidate
/// squares divide it.
pub fn semisimplicity_report(
    g: &Graph,
    candidates: &[Candidate],
) -> Result<SemisimplicityReport, WalkError> {
    let arcs = crate::graph::default_arc_system(g);
    let ops = build_walk_operators(g, &arcs)?;
    let min_poly = min_poly(&ops.t)?;
    let sf = squarefree_analysis(&min_poly)?;
    let mut matched = Vec::new();
    for c in candidates {
        if poly_divides(&c.poly.mul(&c.poly), &min_poly)? {
            matched.push(c.name.clone());
        }
    }
    Ok(SemisimplicityReport {
        graph6: to_graph6(g).unwrap_or_default(),
        is_semisimple: sf.is_squarefree,
        repeated_part: sf.repeated_part,
        min_poly,
        matched_candidates: matched,
        min_degree: g.min_degree(),
        regular_valency: g.regular_valency().filter(|_| g.n() > 0),
    })
}

/// Minimal polynomial of `T` acting on `L`, in the coordinates of the direct
/// kernel basis. `None` when `L = 0`.
pub fn restricted_t_min_poly(g: &Graph, arcs: &ArcSystem) -> Result<Option<RatPoly>, WalkError> {
    let ops = build_walk_operators(g, arcs)?;
    let l = kernel_l_for(g, arcs).vectors;
    if l.cols() == 0 {
        return Ok(None);
    }
    let restricted = crate::exact::restrict_to_invariant_subspace(&ops.t, &l)?;
    Ok(Some(min_poly(&restricted)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::default_arc_system;

    fn ops(g: &Graph) -> WalkOperators {
        build_walk_operators(g, &default_arc_system(g)).unwrap()
    }

    #[test]
    fn k2_operators() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        let o = ops(&g);
        let swap = RatMatrix::from_i64_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(o.p, swap);
        assert!(o.t.is_zero());
        assert_eq!(o.u, swap);
        assert_eq!(o.s_plus_u, swap);
    }

    #[test]
    fn no_edges_is_an_error() {
        let g = Graph::empty(3);
        assert_eq!(
            build_walk_operators(&g, &default_arc_system(&g)),
            Err(WalkError::NoEdges)
        );
        assert!(semisimplicity_report(&g, &[]).is_err());
    }

    #[test]
    fn c4_walk_is_the_non_backtracking_permutation() {
        let g = Graph::cycle(4);
        let o = ops(&g);
        // U is indexed (to, from) and T (from, to)
        assert_eq!(o.u, o.t.transpose());
        assert_eq!(o.s_plus_u, o.u);
        // a permutation with two 4-cycles: T^4 = I, T^2 has no fixed arc
        let t2 = o.t.mul(&o.t);
        assert!(t2.mul(&t2).is_identity());
        assert!((0..8).all(|i| t2[(i, i)].is_zero()));
        assert_eq!(
            min_poly(&o.t).unwrap(),
            RatPoly::from_i64(&[-1, 0, 0, 0, 1])
        );
    }

    #[test]
    fn k4_u_entries_and_orthogonality() {
        let o = ops(&Graph::complete(4));
        let allowed = [ratio(2, 3), ratio(-1, 3), rat(0)];
        assert!(o.u.entries().iter().all(|e| allowed.contains(e)));
        assert!(o.u.mul(&o.u.transpose()).is_identity());
        for j in 0..12 {
            let s: Rational = o.u.column(j).iter().sum();
            assert_eq!(s, rat(1));
        }
    }

    #[test]
    fn t_entries_follow_the_definition() {
        let g = Graph::complete(4);
        let a = default_arc_system(&g);
        let o = ops(&g);
        for i in 0..a.num_arcs() {
            for j in 0..a.num_arcs() {
                let (u, v) = a.arc(i);
                let (w, x) = a.arc(j);
                assert_eq!(o.t[(i, j)].is_one(), v == w && u != x);
            }
        }
    }

    #[test]
    fn identity_suite_k4() {
        let g = Graph::complete(4);
        let report = operator_identity_suite(&g, &default_arc_system(&g));
        assert!(report.values().all(IdentityOutcome::holds), "{report:?}");
    }

    #[test]
    fn identity_suite_k2_skips_support_formula() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        let a = default_arc_system(&g);
        let report = operator_identity_suite(&g, &a);
        assert!(matches!(
            report["s_plus_u_formula"],
            IdentityOutcome::Skipped { .. }
        ));
        assert!(report.values().all(|o| !o.is_violated()));
        // the formula itself really fails here
        let o = ops(&g);
        let inc = build_incidences(&g, &a);
        let formula = inc.dout_x.transpose().mul(&inc.din_x).sub(&o.p);
        assert!(formula.is_zero());
        assert_ne!(o.s_plus_u, formula);
    }

    #[test]
    fn p3_is_nilpotent() {
        let g = Graph::path(3);
        let o = ops(&g);
        assert!(!o.t.is_zero());
        assert!(o.t.mul(&o.t).is_zero());
        let r = semisimplicity_report(&g, &Candidate::defaults()).unwrap();
        assert_eq!(r.min_poly, RatPoly::from_i64(&[0, 0, 1]));
        assert!(!r.is_semisimple);
        assert_eq!(r.repeated_part, RatPoly::x());
    }

    #[test]
    fn petersen_is_semisimple() {
        let r = semisimplicity_report(&Graph::petersen(), &Candidate::defaults()).unwrap();
        assert!(r.is_semisimple);
        assert_eq!(r.regular_valency, Some(3));
        assert!(r.matched_candidates.is_empty());
    }

    #[test]
    fn t_on_l_is_minus_p() {
        for g in [Graph::complete(4), Graph::petersen(), Graph::path(3)] {
            let a = default_arc_system(&g);
            match restricted_t_min_poly(&g, &a).unwrap() {
                Some(p) => assert!(squarefree_analysis(&p).unwrap().is_squarefree),
                None => assert_eq!(g.m() + 1, g.n()),
            }
        }
    }
}

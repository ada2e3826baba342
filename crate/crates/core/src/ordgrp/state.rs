//! States: the functionals nonnegative on the cone and normalized at
//! the unit.
//!
//! For a finitely generated cone the states form a compact rational
//! polytope cut out by one inequality per generator plus the unit
//! normalization; its vertices are rational and are enumerated exactly
//! by basis search. A valid lexicographic block forces the functional
//! to be a nonnegative multiple of the leading functional, so its
//! state is unique. Direct sums mix summand states with convex
//! weights. Vertex enumeration drives three things: the canonical
//! (vertex-average) state, the infinitesimal subgroup as the common
//! kernel, and uniqueness checks.

use num_traits::{One, Signed, Zero};

use crate::ratlin::{
    kernel_basis, lp, solve_linear, LinConstraint, LpOutcome, Rat, RatMat,
    RatVec, Rel, Strictness,
};

use super::{Cone, ScaledOrderedGroup, State, Subgroup};

/// The solution set of the state axioms as explicit constraints over
/// the functional coordinates followed by `aux` auxiliary variables
/// (one per lexicographic block, carrying its multiplier).
#[derive(Clone, Debug)]
pub struct StatePolytope {
    pub dim: usize,
    pub aux: usize,
    pub constraints: Vec<LinConstraint>,
}

impl StatePolytope {
    pub fn for_group(g: &ScaledOrderedGroup) -> StatePolytope {
        let dim = g.dim();
        let aux = count_lex_blocks(g.cone());
        let total = dim + aux;
        let mut constraints = Vec::new();
        let mut aux_cursor = dim;
        dual_rows(g.cone(), 0, &mut aux_cursor, total, &mut constraints);
        let mut unit_row = RatVec::zeros(total);
        for i in 0..dim {
            unit_row[i] = g.unit()[i].clone();
        }
        constraints.push(LinConstraint::eq(unit_row, Rat::one()));
        StatePolytope {
            dim,
            aux,
            constraints,
        }
    }

    /// Vertices projected to the functional coordinates.
    pub fn vertices(&self) -> Vec<RatVec> {
        let pts = polytope_vertices(self.dim + self.aux, &self.constraints);
        extreme_points(dedupe(
            pts.into_iter().map(|p| p.slice(0..self.dim)).collect(),
        ))
    }
}

fn count_lex_blocks(cone: &Cone) -> usize {
    match cone {
        Cone::FinGen { .. } => 0,
        Cone::Lex { .. } => 1,
        Cone::DirectSum { summands } => summands.iter().map(count_lex_blocks).sum(),
    }
}

fn dual_rows(
    cone: &Cone,
    offset: usize,
    aux_cursor: &mut usize,
    total: usize,
    out: &mut Vec<LinConstraint>,
) {
    match cone {
        Cone::FinGen { dim, generators } => {
            for g in generators {
                let mut row = RatVec::zeros(total);
                for i in 0..*dim {
                    row[offset + i] = g[i].clone();
                }
                out.push(LinConstraint::ge(row, Rat::zero()));
            }
        }
        Cone::Lex {
            dim, functionals, ..
        } => {
            // phi restricted to the block equals c * f1 with c >= 0.
            let c_col = *aux_cursor;
            *aux_cursor += 1;
            let f1 = &functionals[0];
            for i in 0..*dim {
                let mut row = RatVec::zeros(total);
                row[offset + i] = Rat::one();
                row[c_col] = -f1[i].clone();
                out.push(LinConstraint::eq(row, Rat::zero()));
            }
            out.push(LinConstraint::ge(RatVec::basis(total, c_col), Rat::zero()));
        }
        Cone::DirectSum { summands } => {
            let mut off = offset;
            for c in summands {
                dual_rows(c, off, aux_cursor, total, out);
                off += c.dim();
            }
        }
    }
}

/// The set of states, mirroring the cone's shape.
#[derive(Clone, Debug)]
pub enum StateSet {
    Polytope(StatePolytope),
    Singleton(State),
    /// Per-summand state sets; a state of the sum restricts to a
    /// nonnegative multiple of a summand state on each block, with the
    /// weights summing to one through the unit normalization.
    Mixture(Vec<StateSet>),
}

/// The state set of `g`: a polytope for finitely generated cones, the
/// normalized leading functional for lexicographic ones, a mixture for
/// direct sums.
pub fn state_set(g: &ScaledOrderedGroup) -> StateSet {
    match g.cone() {
        Cone::FinGen { .. } => StateSet::Polytope(StatePolytope::for_group(g)),
        Cone::Lex { functionals, .. } => {
            let f1 = &functionals[0];
            let v = f1.dot(g.unit());
            debug_assert!(v.is_positive(), "group invariant");
            let state = State {
                functional: f1.scale(&v.recip()),
            };
            StateSet::Singleton(state)
        }
        Cone::DirectSum { summands } => {
            let mut parts = Vec::new();
            let mut offset = 0;
            for c in summands {
                let d = c.dim();
                let part = ScaledOrderedGroup::new(c.clone(), g.unit().slice(offset..offset + d))
                    .expect("summand invariants hold");
                parts.push(state_set(&part));
                offset += d;
            }
            StateSet::Mixture(parts)
        }
    }
}

/// Exact vertex enumeration of `{x : constraints}` by basis search:
/// every vertex is the unique solution of the equality rows plus a
/// choice of active inequalities. Only usable on systems whose
/// solution set is a polytope (states always are: the unit bounds
/// every functional).
pub fn polytope_vertices(nvars: usize, constraints: &[LinConstraint]) -> Vec<RatVec> {
    let eqs: Vec<&LinConstraint> = constraints.iter().filter(|c| c.rel == Rel::Eq).collect();
    let ineqs: Vec<&LinConstraint> = constraints.iter().filter(|c| c.rel == Rel::Ge).collect();
    assert!(
        constraints.iter().all(|c| c.rel != Rel::Gt),
        "vertex enumeration expects a closed system"
    );
    assert!(ineqs.len() <= 24, "vertex enumeration out of its league");

    let eq_rows: Vec<RatVec> = eqs.iter().map(|c| c.coeffs.clone()).collect();
    let eq_rank = RatMat::from_rows(eq_rows.clone(), nvars).rank();
    let need = nvars.saturating_sub(eq_rank);
    let mut out = Vec::new();
    for subset in subsets_of_size(ineqs.len(), need) {
        let mut rows = eq_rows.clone();
        let mut rhs: Vec<Rat> = eqs.iter().map(|c| c.rhs.clone()).collect();
        for &i in &subset {
            rows.push(ineqs[i].coeffs.clone());
            rhs.push(ineqs[i].rhs.clone());
        }
        let m = RatMat::from_rows(rows, nvars);
        if m.rank() < nvars {
            continue;
        }
        let b = RatVec::new(rhs);
        let Ok(Some(x)) = solve_linear(&m, &b) else {
            continue;
        };
        if constraints.iter().all(|c| c.satisfied_by(&x, false)) {
            out.push(x);
        }
    }
    dedupe(out)
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn dedupe(points: Vec<RatVec>) -> Vec<RatVec> {
    let set: std::collections::BTreeSet<RatVec> = points.into_iter().collect();
    set.into_iter().collect()
}

/// Filters to the extreme points: a point survives iff it is not a
/// convex combination of the others.
fn extreme_points(points: Vec<RatVec>) -> Vec<RatVec> {
    if points.len() <= 1 {
        return points;
    }
    let dim = points[0].len();
    let mut kept = points;
    let mut i = 0;
    while i < kept.len() {
        let v = kept[i].clone();
        let others: Vec<RatVec> = kept
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, p)| p.clone())
            .collect();
        let m = others.len();
        let mut cons = Vec::new();
        for c in 0..dim {
            let row: RatVec = others.iter().map(|p| p[c].clone()).collect();
            cons.push(LinConstraint::eq(row, v[c].clone()));
        }
        cons.push(LinConstraint::eq(RatVec::new(vec![Rat::one(); m]), Rat::one()));
        for j in 0..m {
            cons.push(LinConstraint::ge(RatVec::basis(m, j), Rat::zero()));
        }
        let in_hull = matches!(
            lp(None, &cons, Strictness::Weaken).expect("consistent dims"),
            LpOutcome::Feasible(_)
        );
        if in_hull {
            kept.remove(i);
        } else {
            i += 1;
        }
    }
    kept
}

/// Vertices of the state polytope of `g` in functional coordinates.
pub fn state_vertices(g: &ScaledOrderedGroup) -> Vec<RatVec> {
    StatePolytope::for_group(g).vertices()
}

/// The canonical state: the exact average of the state polytope's
/// vertices. Deterministic, and in the relative interior, so it is
/// strictly positive wherever any state is.
pub fn canonical_state(g: &ScaledOrderedGroup) -> State {
    let vs = state_vertices(g);
    assert!(!vs.is_empty(), "every scaled ordered group has a state");
    let avg = average(&vs);
    State::for_group(g, avg).expect("average of states is a state")
}

fn average(points: &[RatVec]) -> RatVec {
    let n = points.len();
    let mut acc = RatVec::zeros(points[0].len());
    for p in points {
        acc = acc.add(p);
    }
    acc.scale(&Rat::new(1.into(), (n as i64).into()))
}

/// Failure certificate of [`find_state`]: the Farkas multipliers
/// refute the assembled constraint system, meaning the subgroup pair
/// violates the hypotheses under which a state must exist.
#[derive(Debug, Clone, thiserror::Error)]
#[error("no state vanishes on the subgroup and is nonnegative on the given elements")]
pub struct FindStateError {
    pub farkas: RatVec,
    pub constraints: Vec<LinConstraint>,
}

/// A state vanishing on `h1` and nonnegative on each element of `h2`.
/// The canonical representative is the vertex average of the feasible
/// region. Infeasibility returns the Farkas certificate.
pub fn find_state(
    g: &ScaledOrderedGroup,
    h1: &Subgroup,
    h2: &[RatVec],
) -> Result<State, FindStateError> {
    let base = StatePolytope::for_group(g);
    let total = base.dim + base.aux;
    let mut cons = base.constraints.clone();
    for v in h1.qspan_basis() {
        cons.push(LinConstraint::eq(pad(&v, total), Rat::zero()));
    }
    for w in h2 {
        cons.push(LinConstraint::ge(pad(w, total), Rat::zero()));
    }
    match lp(None, &cons, Strictness::Weaken).expect("consistent dims") {
        LpOutcome::Feasible(_) => {
            let vs = polytope_vertices(total, &cons);
            let vs = extreme_points(dedupe(
                vs.into_iter().map(|p| p.slice(0..base.dim)).collect(),
            ));
            let avg = average(&vs);
            Ok(State::for_group(g, avg).expect("feasible region lies in the state polytope"))
        }
        LpOutcome::Infeasible(farkas) => Err(FindStateError {
            farkas,
            constraints: cons,
        }),
        other => unreachable!("feasibility query returned {:?}", other),
    }
}

fn pad(v: &RatVec, total: usize) -> RatVec {
    let mut out = RatVec::zeros(total);
    for i in 0..v.len() {
        out[i] = v[i].clone();
    }
    out
}

/// Basis of the infinitesimal subgroup: the common kernel of all
/// states, computed as the kernel of the vertex matrix of the state
/// polytope (states are the convex hull of the vertices, so the two
/// kernels agree).
pub fn infinitesimals(g: &ScaledOrderedGroup) -> Subgroup {
    let vs = state_vertices(g);
    let m = RatMat::from_rows(vs, g.dim());
    Subgroup::qspan(g.dim(), kernel_basis(&m))
}

/// Decides whether some state kills `x` while staying strictly
/// positive on every element of `strict_set`; this is the group-level
/// surrogate for being induced by a faithful trace.
pub(crate) fn kill_with_strictness(
    g: &ScaledOrderedGroup,
    x: &RatVec,
    strict_set: &[RatVec],
) -> Result<State, Option<RatVec>> {
    let base = StatePolytope::for_group(g);
    let total = base.dim + base.aux;
    let mut cons = base.constraints.clone();
    cons.push(LinConstraint::eq(pad(x, total), Rat::zero()));
    let mut strict = cons.clone();
    for s in strict_set {
        strict.push(LinConstraint::gt(pad(s, total), Rat::zero()));
    }
    match lp(None, &strict, Strictness::TwoPhase).expect("consistent dims") {
        LpOutcome::Feasible(p) => {
            let functional = p.slice(0..base.dim);
            Ok(State::for_group(g, functional).expect("point satisfies the state axioms"))
        }
        LpOutcome::Infeasible(_) => {
            // By convexity, strict infeasibility over a nonempty base
            // region pins some element of the strict set at zero.
            for s in strict_set {
                let obj = pad(s, total);
                match lp(Some(&obj), &cons, Strictness::Weaken).expect("consistent dims") {
                    LpOutcome::Bounded { value, .. } if value.is_zero() => {
                        return Err(Some(s.clone()));
                    }
                    LpOutcome::Infeasible(_) => return Err(None),
                    _ => {}
                }
            }
            Err(None)
        }
        other => unreachable!("feasibility query returned {:?}", other),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordgrp::tests::{halfplane_ray_sum, orthant};
    use crate::ratlin::{rat, rint};

    fn rv(v: &[i64]) -> RatVec {
        RatVec::from_ints(v)
    }

    #[test]
    fn orthant_state_polytope_is_a_segment() {
        let g = orthant(2);
        let vs = state_vertices(&g);
        assert_eq!(vs, vec![rv(&[0, 1]), rv(&[1, 0])]);
        let c = canonical_state(&g);
        assert_eq!(c.functional(), &RatVec::new(vec![rat(1, 2), rat(1, 2)]));
    }

    #[test]
    fn halfplane_ray_sum_states_are_the_expected_segment() {
        // States are (a, 0, c) with a + c = 1, a, c >= 0: the second
        // coordinate is forced to zero by the lexicographic block.
        let g = halfplane_ray_sum();
        let vs = state_vertices(&g);
        assert_eq!(vs, vec![rv(&[0, 0, 1]), rv(&[1, 0, 0])]);
    }

    #[test]
    fn halfplane_ray_sum_infinitesimals() {
        let g = halfplane_ray_sum();
        let inf = infinitesimals(&g);
        assert_eq!(inf.generators(), &[rv(&[0, 1, 0])]);
    }

    #[test]
    fn orthant_has_no_infinitesimals() {
        let g = orthant(3);
        assert_eq!(infinitesimals(&g).rank(), 0);
    }

    #[test]
    fn find_state_on_trivial_pair_returns_canonical() {
        let g = orthant(2);
        let s = find_state(&g, &Subgroup::zero(2), &[]).unwrap();
        assert_eq!(s.functional(), canonical_state(&g).functional());
    }

    #[test]
    fn find_state_kill_line_forces_unique_state() {
        let g = halfplane_ray_sum();
        let h1 = Subgroup::qspan(3, vec![rv(&[0, 1, -1])]);
        let s = find_state(&g, &h1, &[rv(&[0, 1, -1])]).unwrap();
        assert_eq!(s.functional(), &rv(&[1, 0, 0]));
    }

    #[test]
    fn find_state_reports_farkas_on_violated_hypotheses() {
        let g = orthant(2);
        // Killing a cone generator has no state solution.
        let h1 = Subgroup::qspan(2, vec![rv(&[1, 0]), rv(&[0, 1])]);
        let err = find_state(&g, &h1, &[]).unwrap_err();
        assert!(crate::ratlin::farkas_refutes(&err.constraints, &err.farkas));
    }

    #[test]
    fn lex_group_state_is_singleton() {
        let c = Cone::lex(
            2,
            vec![RatVec::new(vec![rat(1, 2), rat(1, 2)]), rv(&[1, 0])],
            super::super::LexTail::ZeroOnly,
        );
        let g = ScaledOrderedGroup::new(c, rv(&[1, 1])).unwrap();
        match state_set(&g) {
            StateSet::Singleton(s) => {
                assert_eq!(s.functional(), &RatVec::new(vec![rat(1, 2), rat(1, 2)]));
                assert_eq!(s.eval(g.unit()), rint(1));
            }
            other => panic!("expected singleton, got {:?}", other),
        }
    }
}

//! Polyhedral cones: projection, form conversion, redundancy pruning.
//!
//! A cone is handled in two interchangeable forms — a generator list
//! (nonnegative rational combinations) and a homogeneous inequality
//! list `a . x >= 0`. Conversion in both directions reduces to a single
//! primitive: Fourier–Motzkin elimination of the combination
//! multipliers from the lifted system `{x = G lambda, lambda >= 0}`,
//! combined with cone bipolarity. Rows are pruned by one LP call per
//! candidate, which is affordable at the dimensions this crate targets.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use super::linalg::{Rat, RatVec};
use super::lp::{lp, LinConstraint, LpOutcome, Strictness};

/// Input form accepted by [`project_cone`].
#[derive(Clone, Debug)]
pub enum ConeInput {
    Generators(Vec<RatVec>),
    Inequalities(Vec<RatVec>),
}

/// A cone in both generator and inequality form.
///
/// Membership is `x` in the nonnegative span of `generators`, which
/// coincides with `a . x >= 0` for every row `a` of `inequalities`.
/// Lineality shows up as opposite generator pairs, never as a separate
/// field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeDesc {
    pub dim: usize,
    pub generators: Vec<RatVec>,
    pub inequalities: Vec<RatVec>,
}

impl ConeDesc {
    pub fn from_generators(dim: usize, generators: Vec<RatVec>) -> ConeDesc {
        let gens = prune_generators(normalize_rays(generators));
        let ineqs = generators_to_inequalities(&gens, dim);
        ConeDesc {
            dim,
            generators: gens,
            inequalities: ineqs,
        }
    }

    pub fn from_inequalities(dim: usize, inequalities: Vec<RatVec>) -> ConeDesc {
        let ineqs = prune_inequalities(normalize_rays(inequalities), dim);
        let gens = inequalities_to_generators(&ineqs, dim);
        ConeDesc {
            dim,
            generators: gens,
            inequalities: ineqs,
        }
    }

    /// Membership through the inequality form.
    pub fn contains(&self, x: &RatVec) -> bool {
        assert_eq!(x.len(), self.dim, "contains: dimension mismatch");
        self.inequalities
            .iter()
            .all(|a| !a.dot(x).is_negative())
    }

    /// Membership through the generator form, as an independent route.
    pub fn contains_via_generators(&self, x: &RatVec) -> bool {
        assert_eq!(x.len(), self.dim, "dimension mismatch");
        if x.is_zero() {
            return true;
        }
        if self.generators.is_empty() {
            return false;
        }
        in_generated_cone(&self.generators, x)
    }

    /// The reflected cone `-C`.
    pub fn negated(&self) -> ConeDesc {
        ConeDesc {
            dim: self.dim,
            generators: self.generators.iter().map(|g| g.neg()).collect(),
            inequalities: self.inequalities.iter().map(|a| a.neg()).collect(),
        }
    }
}

/// Whether `x` is a nonnegative combination of `generators` (an LP
/// feasibility query).
pub fn in_generated_cone(generators: &[RatVec], x: &RatVec) -> bool {
    if x.is_zero() {
        return true;
    }
    if generators.is_empty() {
        return false;
    }
    cone_combination(generators, x).is_some()
}

/// Nonnegative coefficients expressing `x` over `generators`, if any.
pub fn cone_combination(generators: &[RatVec], x: &RatVec) -> Option<RatVec> {
    let dim = x.len();
    let m = generators.len();
    if m == 0 {
        return x.is_zero().then(|| RatVec::zeros(0));
    }
    let mut cons = Vec::with_capacity(dim + m);
    for i in 0..dim {
        let row: RatVec = generators.iter().map(|g| g[i].clone()).collect();
        cons.push(LinConstraint::eq(row, x[i].clone()));
    }
    for j in 0..m {
        cons.push(LinConstraint::ge(RatVec::basis(m, j), Rat::zero()));
    }
    match lp(None, &cons, Strictness::Weaken).expect("dimensions are consistent") {
        LpOutcome::Feasible(lam) => Some(lam),
        _ => None,
    }
}

/// Coordinate projection of a polyhedral cone. Generator inputs are
/// projected directly; inequality inputs go through Fourier–Motzkin on
/// the dropped coordinates. Both forms of the image are returned, with
/// redundancy eliminated.
pub fn project_cone(input: &ConeInput, dim: usize, keep: &[usize]) -> ConeDesc {
    assert!(keep.iter().all(|&i| i < dim), "projection index range");
    match input {
        ConeInput::Generators(gens) => {
            let projected: Vec<RatVec> = gens.iter().map(|g| g.select(keep)).collect();
            ConeDesc::from_generators(keep.len(), projected)
        }
        ConeInput::Inequalities(ineqs) => {
            // Reorder coordinates so the kept ones come first, then
            // eliminate the rest.
            let keep_set: BTreeSet<usize> = keep.iter().copied().collect();
            assert_eq!(keep_set.len(), keep.len(), "duplicate projection index");
            let dropped: Vec<usize> = (0..dim).filter(|i| !keep_set.contains(i)).collect();
            let order: Vec<usize> = keep.iter().copied().chain(dropped.iter().copied()).collect();
            let mut rows: Vec<RatVec> = ineqs.iter().map(|a| a.select(&order)).collect();
            for v in (keep.len()..dim).rev() {
                rows = fm_eliminate(rows, v);
            }
            let truncated: Vec<RatVec> = rows.into_iter().map(|r| r.slice(0..keep.len())).collect();
            ConeDesc::from_inequalities(keep.len(), truncated)
        }
    }
}

/// One Fourier–Motzkin step on homogeneous `>= 0` rows: eliminates
/// variable `v`, keeping rows with zero coefficient and pairing the
/// rest with positive combinations. Rows are normalized and deduped;
/// large intermediate sets are LP-pruned to keep growth in check.
fn fm_eliminate(rows: Vec<RatVec>, v: usize) -> Vec<RatVec> {
    let mut zero = Vec::new();
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for r in rows {
        if r[v].is_zero() {
            zero.push(r);
        } else if r[v].is_positive() {
            pos.push(r);
        } else {
            neg.push(r);
        }
    }
    let mut out = zero;
    for p in &pos {
        for n in &neg {
            // p[v] * n - n[v] * p has the v-entry cancelled and is a
            // nonnegative combination of the two rows.
            let row = n.scale(&p[v]).sub(&p.scale(&n[v]));
            debug_assert!(row[v].is_zero());
            if !row.is_zero() {
                out.push(row);
            }
        }
    }
    let out = dedupe_rays(out);
    if out.len() > 16 {
        prune_inequalities_at(out, v)
    } else {
        out
    }
}

fn normalize_rays(rows: Vec<RatVec>) -> Vec<RatVec> {
    dedupe_rays(rows.into_iter().map(|r| r.primitive()).collect())
}

fn dedupe_rays(rows: Vec<RatVec>) -> Vec<RatVec> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for r in rows {
        let r = r.primitive();
        if r.is_zero() {
            continue;
        }
        if seen.insert(r.clone()) {
            out.push(r);
        }
    }
    out
}

/// Removes generators lying in the cone of the remaining ones. The
/// scan order is fixed, so the surviving set is canonical.
pub fn prune_generators(gens: Vec<RatVec>) -> Vec<RatVec> {
    let gens = dedupe_rays(gens);
    let mut kept = gens;
    let mut i = 0;
    while i < kept.len() {
        let candidate = kept[i].clone();
        let others: Vec<RatVec> = kept
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g.clone())
            .collect();
        if in_generated_cone(&others, &candidate) {
            kept.remove(i);
        } else {
            i += 1;
        }
    }
    kept
}

/// Removes inequality rows implied by the remaining ones. A row `r` is
/// redundant iff `r . x` is bounded below (by zero) over the cone cut
/// out by the others.
pub fn prune_inequalities(rows: Vec<RatVec>, dim: usize) -> Vec<RatVec> {
    prune_inequalities_impl(dedupe_rays(rows), dim)
}

fn prune_inequalities_at(rows: Vec<RatVec>, upto_var: usize) -> Vec<RatVec> {
    // During elimination rows still live in the full coordinate space;
    // pruning is sound in that space.
    let dim = rows.first().map_or(upto_var, |r| r.len());
    prune_inequalities_impl(rows, dim)
}

fn prune_inequalities_impl(rows: Vec<RatVec>, dim: usize) -> Vec<RatVec> {
    let mut kept = rows;
    let mut i = 0;
    while i < kept.len() {
        let candidate = kept[i].clone();
        let others: Vec<LinConstraint> = kept
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, a)| LinConstraint::ge(a.clone(), Rat::zero()))
            .collect();
        let redundant = if others.is_empty() {
            candidate.is_zero()
        } else {
            let obj = candidate.neg();
            match lp(Some(&obj), &others, Strictness::Weaken).expect("consistent dims") {
                LpOutcome::Bounded { value, .. } => {
                    debug_assert!(value.is_zero());
                    true
                }
                LpOutcome::Unbounded(_) => false,
                other => unreachable!("homogeneous system: {:?}", other),
            }
        };
        if redundant {
            kept.remove(i);
        } else {
            i += 1;
        }
        let _ = dim;
    }
    kept
}

/// Inequality form of `cone(generators)` by eliminating the
/// multipliers from `{x = G lambda, lambda >= 0}`.
pub fn generators_to_inequalities(generators: &[RatVec], dim: usize) -> Vec<RatVec> {
    if generators.is_empty() {
        // The zero cone: x = 0, as opposite inequality pairs.
        let mut rows = Vec::new();
        for i in 0..dim {
            rows.push(RatVec::basis(dim, i));
            rows.push(RatVec::basis(dim, i).neg());
        }
        return rows;
    }
    let m = generators.len();
    let total = dim + m;
    let mut rows = Vec::new();
    for i in 0..dim {
        // x_i - sum_j g_j[i] lambda_j = 0, split into a >= pair.
        let mut row = RatVec::zeros(total);
        row[i] = Rat::one();
        for (j, g) in generators.iter().enumerate() {
            row[dim + j] = -g[i].clone();
        }
        rows.push(row.clone());
        rows.push(row.neg());
    }
    for j in 0..m {
        rows.push(RatVec::basis(total, dim + j));
    }
    for v in (dim..total).rev() {
        rows = fm_eliminate(rows, v);
    }
    let rows: Vec<RatVec> = rows.into_iter().map(|r| r.slice(0..dim)).collect();
    let rows = prune_inequalities(rows, dim);
    if rows.is_empty() && dim > 0 {
        // Full space: keep an explicit trivially-valid row so the
        // inequality form is never mistaken for "unconstrained by
        // accident" downstream. The zero row accepts everything.
        return Vec::new();
    }
    rows
}

/// Generator form of `{x : a . x >= 0 for all rows}` through cone
/// bipolarity: the generators are the inequality rows of the cone
/// generated by the input rows.
pub fn inequalities_to_generators(rows: &[RatVec], dim: usize) -> Vec<RatVec> {
    if rows.is_empty() {
        // Whole space.
        let mut gens = Vec::new();
        for i in 0..dim {
            gens.push(RatVec::basis(dim, i));
            gens.push(RatVec::basis(dim, i).neg());
        }
        return gens;
    }
    let gens = generators_to_inequalities(rows, dim);
    prune_generators(gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratlin::linalg::rint;

    fn rv(v: &[i64]) -> RatVec {
        RatVec::from_ints(v)
    }

    #[test]
    fn orthant_conversion_round_trip() {
        let c = ConeDesc::from_generators(2, vec![rv(&[1, 0]), rv(&[0, 1])]);
        assert!(c.contains(&rv(&[3, 5])));
        assert!(!c.contains(&rv(&[-1, 2])));
        assert_eq!(c.contains(&rv(&[1, 1])), c.contains_via_generators(&rv(&[1, 1])));
        assert_eq!(
            c.contains(&rv(&[-1, 2])),
            c.contains_via_generators(&rv(&[-1, 2]))
        );
    }

    #[test]
    fn single_ray_has_equality_pair() {
        let c = ConeDesc::from_generators(2, vec![rv(&[1, 1])]);
        assert!(c.contains(&rv(&[2, 2])));
        assert!(!c.contains(&rv(&[1, 0])));
        assert!(!c.contains(&rv(&[-1, -1])));
    }

    #[test]
    fn halfspace_from_inequalities_gets_lineality_generators() {
        let c = ConeDesc::from_inequalities(2, vec![rv(&[1, 0])]);
        assert!(c.contains_via_generators(&rv(&[0, 1])));
        assert!(c.contains_via_generators(&rv(&[0, -1])));
        assert!(c.contains_via_generators(&rv(&[5, -3])));
        assert!(!c.contains_via_generators(&rv(&[-1, 0])));
    }

    #[test]
    fn project_wedge_to_line() {
        let input = ConeInput::Generators(vec![rv(&[1, 1]), rv(&[1, -1])]);
        let p = project_cone(&input, 2, &[0]);
        assert_eq!(p.generators, vec![rv(&[1])]);
        assert!(p.contains(&RatVec::new(vec![rint(7)])));
        assert!(!p.contains(&RatVec::new(vec![rint(-1)])));
    }

    #[test]
    fn project_zero_cone() {
        let input = ConeInput::Generators(vec![]);
        let p = project_cone(&input, 3, &[0, 2]);
        assert!(p.generators.is_empty());
        assert!(p.contains(&rv(&[0, 0])));
        assert!(!p.contains(&rv(&[1, 0])));
    }

    #[test]
    fn project_inequality_form() {
        // {x >= 0, y >= 0, z free} projected to (x, y) keeps the
        // quadrant; projected to (x, z) frees z.
        let input = ConeInput::Inequalities(vec![rv(&[1, 0, 0]), rv(&[0, 1, 0])]);
        let p = project_cone(&input, 3, &[0, 2]);
        assert!(p.contains(&rv(&[1, -5])));
        assert!(p.contains(&rv(&[0, 3])));
        assert!(!p.contains(&rv(&[-1, 0])));
    }

    #[test]
    fn prune_removes_inner_ray() {
        let gens = prune_generators(vec![rv(&[1, 0]), rv(&[0, 1]), rv(&[1, 1])]);
        assert_eq!(gens.len(), 2);
        assert!(gens.contains(&rv(&[1, 0])) && gens.contains(&rv(&[0, 1])));
    }
}

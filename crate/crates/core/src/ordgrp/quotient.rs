//! Quotient orders, maximality of singular subgroups, and greedy
//! extension.
//!
//! The quotient of `(G, G+)` by a singular rational-span subgroup
//! carries the cone "some representative of the class is positive",
//! which is exactly the image of `G+` under the quotient projection.
//! Maximality of a singular subgroup is equivalent to the quotient
//! order being total, decided exactly on the inequality form of the
//! projected cone.

use num_traits::One;

use crate::ratlin::{
    generators_to_inequalities, lp, prune_generators, LinConstraint, LpOutcome, Rat, RatMat,
    RatVec, Strictness,
};

use super::{
    is_singular, satisfies_divisibility, Cone, Divisibility, GroupError, ScaledOrderedGroup,
    Singularity, SpanKind, Subgroup,
};

#[derive(Debug, Clone, thiserror::Error)]
pub enum QuotientError {
    #[error("subgroup is not singular; quotient cone would be improper (witness {witness:?})")]
    NotSingular { witness: RatVec },
    #[error("Z-span fails divisibility (witness {witness:?}, k = {k}); the quotient would have torsion")]
    Divisibility { witness: RatVec, k: num_bigint::BigInt },
    #[error("quotient orders are only computed over finitely generated cones")]
    NotFinGen,
    #[error("quotient group construction failed: {0}")]
    Group(#[from] GroupError),
}

/// The canonical projection along `span(h)`: pivot coordinates of the
/// reduced basis are eliminated, free coordinates survive. Returns the
/// projection matrix and the list of surviving coordinates.
fn projection_along(basis: &[RatVec], dim: usize) -> (RatMat, Vec<usize>) {
    let pivots: Vec<usize> = {
        let m = RatMat::from_rows(basis.to_vec(), dim);
        m.rref().1
    };
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let free: Vec<usize> = (0..dim).filter(|c| !pivot_set.contains(c)).collect();
    let mut p = RatMat::zeros(free.len(), dim);
    for (r, &f) in free.iter().enumerate() {
        p[(r, f)] = Rat::one();
        for (k, &pv) in pivots.iter().enumerate() {
            // x minus its pivot components lands on the free
            // coordinates; basis is in RREF so row k has pivot pv.
            p[(r, pv)] = -basis[k][f].clone();
        }
    }
    (p, free)
}

/// Quotient of `g` by the span of `h`, ordered by the image of the
/// cone, with the realizing projection matrix. Rejects non-singular
/// subgroups and unsaturated `Z`-spans.
pub fn quotient_order(
    g: &ScaledOrderedGroup,
    h: &Subgroup,
) -> Result<(ScaledOrderedGroup, RatMat), QuotientError> {
    if !g.cone().is_fin_gen_family() {
        return Err(QuotientError::NotFinGen);
    }
    if h.span_kind() == SpanKind::ZSpan {
        if let Divisibility::Fails { witness, k } = satisfies_divisibility(h) {
            return Err(QuotientError::Divisibility { witness, k });
        }
    }
    if let Singularity::NotSingular { witness } = is_singular(g, h) {
        return Err(QuotientError::NotSingular { witness });
    }
    let basis = h.qspan_basis();
    let (p, _free) = projection_along(&basis, g.dim());
    let gens = g
        .cone()
        .embedded_generators()
        .expect("finitely generated family");
    let projected: Vec<RatVec> = gens.iter().map(|gen| p.mul_vec(gen)).collect();
    let cone = Cone::fin_gen(p.nrows(), prune_generators(projected));
    let unit = p.mul_vec(g.unit());
    let quotient = ScaledOrderedGroup::new(cone, unit)?;
    Ok((quotient, p))
}

/// A right inverse of the canonical projection: embeds quotient
/// coordinates back onto the free coordinates.
pub(crate) fn projection_section(h_basis: &[RatVec], dim: usize) -> RatMat {
    let (_, free) = projection_along(h_basis, dim);
    let mut s = RatMat::zeros(dim, free.len());
    for (r, &f) in free.iter().enumerate() {
        s[(f, r)] = Rat::one();
    }
    s
}

/// Verdict of [`is_maximally_singular`].
#[derive(Clone, Debug)]
pub enum MaximalVerdict {
    Maximal,
    /// `span(h, witness)` is still singular.
    NotMaximal { witness: RatVec },
}

/// A singular subgroup is maximal among singular subgroups iff the
/// quotient order is total: the projected cone and its negative cover
/// the quotient space. Decided exactly by LP on the complement of the
/// cover, one query per ordered pair of inequality rows.
pub fn is_maximally_singular(
    g: &ScaledOrderedGroup,
    h: &Subgroup,
) -> Result<MaximalVerdict, QuotientError> {
    let (quotient, _p) = quotient_order(g, h)?;
    let m = quotient.dim();
    let gens = quotient
        .cone()
        .embedded_generators()
        .expect("quotient cone is finitely generated");
    let rows = generators_to_inequalities(&gens, m);
    // A point outside both the cone and its negative violates some row
    // from below and some row from above.
    for a in &rows {
        for b in &rows {
            let cons = vec![
                LinConstraint::ge(a.neg(), Rat::one()),
                LinConstraint::ge(b.clone(), Rat::one()),
            ];
            if let LpOutcome::Feasible(x) =
                lp(None, &cons, Strictness::Weaken).expect("consistent dims")
            {
                let section = projection_section(&h.qspan_basis(), g.dim());
                let lifted = section.mul_vec(&x).primitive();
                debug_assert!(matches!(
                    is_singular(
                        g,
                        &Subgroup::qspan(
                            g.dim(),
                            h.qspan_basis()
                                .iter()
                                .cloned()
                                .chain([lifted.clone()])
                                .collect()
                        )
                    ),
                    Singularity::Singular
                ));
                return Ok(MaximalVerdict::NotMaximal { witness: lifted });
            }
        }
    }
    Ok(MaximalVerdict::Maximal)
}

/// Flag attached to a greedy maximalization result.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MaximalFlag {
    Maximal,
    BestEffort,
}

#[derive(Clone, Debug)]
pub struct Maximalized {
    pub subgroup: Subgroup,
    pub flag: MaximalFlag,
}

/// Greedily extends a singular subgroup over the candidate stream —
/// standard basis vectors, pairwise differences of cone generators,
/// then caller-supplied directions — keeping singularity at every
/// step. The flag records the exact maximality verdict where the
/// quotient machinery applies; greedy extension over this stream can
/// stall below a maximal subgroup, which the flag makes visible.
pub fn maximalize(
    g: &ScaledOrderedGroup,
    h: &Subgroup,
    candidates: &[RatVec],
) -> Maximalized {
    let dim = g.dim();
    let mut current = h.saturate();
    let mut stream: Vec<RatVec> = (0..dim).map(|i| RatVec::basis(dim, i)).collect();
    if let Some(gens) = g.cone().embedded_generators() {
        for i in 0..gens.len() {
            for j in (i + 1)..gens.len() {
                stream.push(gens[i].sub(&gens[j]));
            }
        }
    }
    stream.extend(candidates.iter().cloned());

    for c in stream {
        if c.is_zero() || current.contains(&c) {
            continue;
        }
        let extended = Subgroup::qspan(
            dim,
            current
                .generators()
                .iter()
                .cloned()
                .chain([c.clone()])
                .collect(),
        );
        if matches!(is_singular(g, &extended), Singularity::Singular) {
            current = extended;
        }
    }
    let flag = match is_maximally_singular(g, &current) {
        Ok(MaximalVerdict::Maximal) => MaximalFlag::Maximal,
        _ => MaximalFlag::BestEffort,
    };
    Maximalized {
        subgroup: current,
        flag,
    }
}

/// Extends to an exactly maximal singular subgroup by feeding the
/// maximality witness back into the greedy pass until the verdict is
/// `Maximal`. Terminates: every round raises the span's dimension.
pub fn maximalize_exact(
    g: &ScaledOrderedGroup,
    h: &Subgroup,
) -> Result<Subgroup, QuotientError> {
    let mut extra: Vec<RatVec> = Vec::new();
    loop {
        let out = maximalize(g, h, &extra);
        match is_maximally_singular(g, &out.subgroup)? {
            MaximalVerdict::Maximal => return Ok(out.subgroup),
            MaximalVerdict::NotMaximal { witness } => extra.push(witness),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordgrp::tests::orthant;
    use crate::ordgrp::Membership;

    fn rv(v: &[i64]) -> RatVec {
        RatVec::from_ints(v)
    }

    #[test]
    fn quotient_by_zero_is_identity() {
        let g = orthant(2);
        let (q, p) = quotient_order(&g, &Subgroup::zero(2)).unwrap();
        assert_eq!(q.dim(), 2);
        assert_eq!(p, RatMat::identity(2));
        assert_eq!(q.unit(), g.unit());
    }

    #[test]
    fn quotient_of_plane_by_antidiagonal() {
        let g = orthant(2);
        let h = Subgroup::qspan(2, vec![rv(&[1, -1])]);
        let (q, p) = quotient_order(&g, &h).unwrap();
        assert_eq!(q.dim(), 1);
        // Both generators map to the positive ray; the unit is the
        // coordinate sum.
        assert_eq!(p.mul_vec(&rv(&[1, 0])), rv(&[1]));
        assert_eq!(p.mul_vec(&rv(&[0, 1])), rv(&[1]));
        assert_eq!(q.unit(), &rv(&[2]));
        assert_eq!(q.cone().membership(&rv(&[3])), Membership::PositiveNonzero);
        assert_eq!(q.cone().membership(&rv(&[-1])), Membership::NotInCone);
    }

    #[test]
    fn quotient_rejects_non_singular() {
        let g = orthant(2);
        let h = Subgroup::qspan(2, vec![rv(&[1, 0])]);
        assert!(matches!(
            quotient_order(&g, &h),
            Err(QuotientError::NotSingular { .. })
        ));
    }

    #[test]
    fn quotient_rejects_unsaturated_zspan() {
        let g = orthant(2);
        let h = Subgroup::zspan(2, vec![rv(&[2, -2])]);
        assert!(matches!(
            quotient_order(&g, &h),
            Err(QuotientError::Divisibility { .. })
        ));
    }

    #[test]
    fn antidiagonal_is_maximal_in_plane() {
        let g = orthant(2);
        let h = Subgroup::qspan(2, vec![rv(&[1, -1])]);
        assert!(matches!(
            is_maximally_singular(&g, &h).unwrap(),
            MaximalVerdict::Maximal
        ));
    }

    #[test]
    fn zero_subgroup_is_not_maximal_in_plane() {
        let g = orthant(2);
        match is_maximally_singular(&g, &Subgroup::zero(2)).unwrap() {
            MaximalVerdict::NotMaximal { witness } => {
                let h = Subgroup::qspan(2, vec![witness]);
                assert_eq!(is_singular(&g, &h), Singularity::Singular);
            }
            MaximalVerdict::Maximal => panic!("the zero subgroup extends"),
        }
    }

    #[test]
    fn maximalize_plane_from_zero() {
        let g = orthant(2);
        let out = maximalize(&g, &Subgroup::zero(2), &[]);
        assert_eq!(out.flag, MaximalFlag::Maximal);
        assert_eq!(out.subgroup.rank(), 1);
        assert!(out.subgroup.contains(&rv(&[1, -1])));
    }

    #[test]
    fn maximalize_keeps_already_maximal_input() {
        let g = orthant(2);
        let h = Subgroup::qspan(2, vec![rv(&[1, -1])]);
        let out = maximalize(&g, &h, &[]);
        assert_eq!(out.flag, MaximalFlag::Maximal);
        assert_eq!(out.subgroup.generators(), h.generators());
    }

    #[test]
    fn maximalize_exact_reaches_maximality() {
        let g = orthant(4);
        let h = Subgroup::qspan(4, vec![rv(&[1, -1, 0, 0])]);
        let m = maximalize_exact(&g, &h).unwrap();
        assert!(matches!(
            is_maximally_singular(&g, &m).unwrap(),
            MaximalVerdict::Maximal
        ));
        assert_eq!(m.rank(), 3);
    }
}

//! Lexicographic totalization of partial orders.
//!
//! Given a faithful state `tau` on `(G, G+, u)`, the cone
//! `P = {tau > 0} or (tau = 0 and lex-positive on ker tau)` is a total
//! order refining the original one: faithfulness puts every nonzero
//! cone element strictly inside `{tau > 0}`. Reversing the tiebreak
//! order on the kernel flips the sign of every nonzero kernel element,
//! which is what makes the doubled group kill them: an element that is
//! positive in one copy and negative in the other is singular in the
//! sum.

use num_traits::{Signed, Zero};

use crate::ratlin::{row_space_basis, Rat, RatMat, RatVec};

use crate::ordgrp::{
    cone_contains, direct_sum, is_singular, quotient_order, Cone, GroupError, LexTail, Membership,
    QuotientError, ScaledOrderedGroup, Singularity, State, Subgroup,
};

#[derive(Debug, Clone, thiserror::Error)]
pub enum TotalizeError {
    #[error("basis does not span the ambient space")]
    NonSpanningBasis,
    #[error("state is not faithful: it vanishes on the cone generator {0:?}")]
    NotFaithful(RatVec),
    #[error("tiebreak directions do not span the kernel of the state")]
    TiebreakDoesNotSpanKernel,
    #[error("placement probe must be a nonzero element of the state's kernel")]
    BadProbe,
    #[error("group construction failed: {0}")]
    Group(#[from] GroupError),
    #[error("quotient failed: {0}")]
    Quotient(#[from] QuotientError),
}

/// The lexicographic total-order cone determined by an ordered basis:
/// a vector is positive when its first nonzero coordinate in that
/// basis is positive. The functionals are the dual basis.
pub fn lex_order(basis: &[RatVec]) -> Result<Cone, TotalizeError> {
    let dim = basis.first().map_or(0, |b| b.len());
    let m = RatMat::from_rows(basis.to_vec(), dim);
    if basis.len() != dim || m.rank() != dim {
        return Err(TotalizeError::NonSpanningBasis);
    }
    // Coordinates with respect to the basis are read off by the
    // inverse of the basis-as-columns matrix.
    let inv = m
        .transpose()
        .inverse()
        .expect("full-rank matrix is invertible");
    let functionals: Vec<RatVec> = (0..dim).map(|i| inv.row(i)).collect();
    Ok(Cone::lex(dim, functionals, LexTail::ZeroOnly))
}

/// A totalization: the group with the refined cone, the tiebreak that
/// was used, and the recorded memberships of the original generators
/// in the new cone.
#[derive(Clone, Debug)]
pub struct Totalization {
    pub group: ScaledOrderedGroup,
    pub tiebreak: Vec<RatVec>,
    /// One record per original cone generator: its functional-value
    /// sequence under the new cone, witnessing that the original cone
    /// is contained in the refinement.
    pub inclusion_certificates: Vec<(RatVec, Vec<Rat>)>,
}

/// The default tiebreak: standard basis vectors projected onto
/// `ker(tau)` along the unit, kept in coordinate order while
/// independent.
pub fn default_tiebreak(g: &ScaledOrderedGroup, tau: &State) -> Vec<RatVec> {
    let dim = g.dim();
    let mut picked: Vec<RatVec> = Vec::new();
    for i in 0..dim {
        let e = RatVec::basis(dim, i);
        let proj = e.sub(&g.unit().scale(&tau.eval(&e)));
        let mut trial = picked.clone();
        trial.push(proj.clone());
        if row_space_basis(&trial, dim).len() > picked.len() {
            picked.push(proj);
        }
    }
    picked
}

/// Refines the order of `g` to a total order: `tau` first, then the
/// tiebreak directions lexicographically on its kernel. Requires
/// `tau` faithful (strictly positive on each nonzero generator) and a
/// tiebreak spanning `ker(tau)`; verifies and records that the
/// original cone is contained in the refinement.
pub fn totalize_with_state(
    g: &ScaledOrderedGroup,
    tau: &State,
    tiebreak: Option<&[RatVec]>,
) -> Result<Totalization, TotalizeError> {
    let dim = g.dim();
    let gens = g.cone().fin_gen_block_generators();
    for gen in &gens {
        if !tau.eval(gen).is_positive() {
            return Err(TotalizeError::NotFaithful(gen.clone()));
        }
    }
    let tiebreak: Vec<RatVec> = match tiebreak {
        Some(t) => t.to_vec(),
        None => default_tiebreak(g, tau),
    };
    for t in &tiebreak {
        if !tau.eval(t).is_zero() {
            return Err(TotalizeError::TiebreakDoesNotSpanKernel);
        }
    }
    if row_space_basis(&tiebreak, dim).len() != dim - 1 {
        return Err(TotalizeError::TiebreakDoesNotSpanKernel);
    }
    // Dual basis of (unit, tiebreak...): the first dual functional is
    // tau itself, since tau(unit) = 1 and tau vanishes on the rest.
    let mut basis = vec![g.unit().clone()];
    basis.extend(tiebreak.iter().cloned());
    let cone = lex_order(&basis)?;
    if let Cone::Lex { functionals, .. } = &cone {
        debug_assert_eq!(&functionals[0], tau.functional());
    }
    let group = ScaledOrderedGroup::new(cone.clone(), g.unit().clone())?;
    let mut inclusion_certificates = Vec::new();
    if let Cone::Lex { functionals, .. } = &cone {
        for gen in &gens {
            let seq: Vec<Rat> = functionals.iter().map(|f| f.dot(gen)).collect();
            debug_assert!(
                seq.iter().find(|v| !v.is_zero()).map_or(true, |v| v.is_positive()),
                "faithfulness forces the original cone into the refinement"
            );
            inclusion_certificates.push((gen.clone(), seq));
        }
    }
    Ok(Totalization {
        group,
        tiebreak,
        inclusion_certificates,
    })
}

/// The same refinement with the kernel order reversed: every tiebreak
/// direction is negated, so nonzero kernel elements flip sign while
/// `tau`-positive elements stay positive.
pub fn totalize_reversed(
    g: &ScaledOrderedGroup,
    tau: &State,
    tiebreak: Option<&[RatVec]>,
) -> Result<Totalization, TotalizeError> {
    let forward: Vec<RatVec> = match tiebreak {
        Some(t) => t.to_vec(),
        None => default_tiebreak(g, tau),
    };
    let reversed: Vec<RatVec> = forward.iter().map(RatVec::neg).collect();
    totalize_with_state(g, tau, Some(&reversed))
}

/// Sign of an element under a placement.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PlacementSign {
    Pos,
    Neg,
    Zero,
}

/// The three placements of a kernel element: strictly positive under
/// the forward refinement, strictly negative under the reversed one,
/// and zero in the quotient by its own line.
#[derive(Clone, Debug)]
pub struct PlacementReport {
    pub x: RatVec,
    pub sign_forward: PlacementSign,
    pub sign_reverse: PlacementSign,
    pub sign_quotient: PlacementSign,
    pub witnesses: PlacementWitnesses,
}

/// Certificates behind each placement verdict.
#[derive(Clone, Debug)]
pub struct PlacementWitnesses {
    /// Functional-value sequence of `x` in the forward refinement.
    pub forward_values: Vec<Rat>,
    /// Functional-value sequence of `x` in the reversed refinement.
    pub reverse_values: Vec<Rat>,
    /// Projection realizing the quotient by `span(x)`, and the image
    /// of `x` under it (zero by construction).
    pub quotient_projection: RatMat,
    pub quotient_image: RatVec,
}

fn lex_sign(group: &ScaledOrderedGroup, x: &RatVec) -> (PlacementSign, Vec<Rat>) {
    let values = match group.cone() {
        Cone::Lex { functionals, .. } => functionals.iter().map(|f| f.dot(x)).collect(),
        _ => Vec::new(),
    };
    let sign = match cone_contains(group, x) {
        Membership::Zero => PlacementSign::Zero,
        Membership::PositiveNonzero => PlacementSign::Pos,
        Membership::NotInCone => PlacementSign::Neg,
    };
    (sign, values)
}

/// Places a nonzero `x` with `tau(x) = 0` three ways: forward
/// refinement, reversed refinement, and the quotient by `span(x)`.
pub fn placements(
    g: &ScaledOrderedGroup,
    tau: &State,
    tiebreak: Option<&[RatVec]>,
    x: &RatVec,
) -> Result<PlacementReport, TotalizeError> {
    if x.is_zero() || !tau.eval(x).is_zero() {
        return Err(TotalizeError::BadProbe);
    }
    let fwd = totalize_with_state(g, tau, tiebreak)?;
    let rev = totalize_reversed(g, tau, tiebreak)?;
    let (sign_forward, forward_values) = lex_sign(&fwd.group, x);
    let (sign_reverse, reverse_values) = lex_sign(&rev.group, x);
    // Quotient placement: span(x) is singular (tau is faithful and
    // vanishes on x), so the quotient order exists and kills x.
    let (_, projection) = quotient_order(g, &Subgroup::qspan(g.dim(), vec![x.clone()]))?;
    let image = projection.mul_vec(x);
    debug_assert!(image.is_zero());
    Ok(PlacementReport {
        x: x.clone(),
        sign_forward,
        sign_reverse,
        sign_quotient: PlacementSign::Zero,
        witnesses: PlacementWitnesses {
            forward_values,
            reverse_values,
            quotient_projection: projection,
            quotient_image: image,
        },
    })
}

/// The doubled group `(G, P) + (G, P_reversed)` with the diagonal
/// embedding. Every nonzero kernel element of `tau` maps to a singular
/// element of the sum: positive in one copy, negative in the other.
pub fn doubling(
    g: &ScaledOrderedGroup,
    tau: &State,
    tiebreak: Option<&[RatVec]>,
) -> Result<(ScaledOrderedGroup, RatMat), TotalizeError> {
    let fwd = totalize_with_state(g, tau, tiebreak)?;
    let rev = totalize_reversed(g, tau, tiebreak)?;
    let doubled = direct_sum(&[fwd.group, rev.group]);
    let n = g.dim();
    let mut diag = RatMat::zeros(2 * n, n);
    for i in 0..n {
        diag[(i, i)] = crate::ratlin::rint(1);
        diag[(n + i, i)] = crate::ratlin::rint(1);
    }
    Ok((doubled, diag))
}

/// Verdict of [`faithful_kill_check`].
#[derive(Clone, Debug)]
pub enum KillVerdict {
    /// A state killing `x` while strictly positive on the strict set.
    Killable(State),
    /// No such state; `blocking` is an element of the strict set that
    /// `phi(x) = 0` forces to zero (or `x` itself when no state kills
    /// it at all).
    NotKillable { blocking: RatVec },
}

/// Decides whether `x` can be killed by a state that stays strictly
/// positive on every element of `strict_set` (defaulting to the
/// finitely generated cone blocks' generators). Strict positivity on
/// the generators is the group-level stand-in for the state being
/// induced by a faithful trace.
pub fn faithful_kill_check(
    g: &ScaledOrderedGroup,
    x: &RatVec,
    strict_set: Option<&[RatVec]>,
) -> KillVerdict {
    let default;
    let strict: &[RatVec] = match strict_set {
        Some(s) => s,
        None => {
            default = g.cone().fin_gen_block_generators();
            &default
        }
    };
    match crate::ordgrp::kill_with_strictness(g, x, strict) {
        Ok(state) => KillVerdict::Killable(state),
        Err(Some(blocking)) => KillVerdict::NotKillable { blocking },
        Err(None) => KillVerdict::NotKillable {
            blocking: x.clone(),
        },
    }
}

/// Convenience wrapper asserting the doubling construction on a probe:
/// the diagonal image of a nonzero kernel element spans a singular
/// line.
pub fn diagonal_is_singular(
    doubled: &ScaledOrderedGroup,
    diag: &RatMat,
    x: &RatVec,
) -> Singularity {
    let image = diag.mul_vec(x);
    is_singular(
        doubled,
        &Subgroup::qspan(doubled.dim(), vec![image]),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordgrp::{state_set, StateSet};
    use crate::ratlin::{rat, rint};

    fn rv(v: &[i64]) -> RatVec {
        RatVec::from_ints(v)
    }

    fn orthant(dim: usize) -> ScaledOrderedGroup {
        let gens = (0..dim).map(|i| RatVec::basis(dim, i)).collect();
        ScaledOrderedGroup::new(Cone::fin_gen(dim, gens), RatVec::new(vec![rint(1); dim]))
            .unwrap()
    }

    fn halved_trace(g: &ScaledOrderedGroup) -> State {
        State::for_group(g, RatVec::new(vec![rat(1, 2), rat(1, 2)])).unwrap()
    }

    #[test]
    fn lex_order_standard_basis() {
        let c = lex_order(&[rv(&[1, 0]), rv(&[0, 1])]).unwrap();
        assert_eq!(c.membership(&rv(&[1, -7])), Membership::PositiveNonzero);
        assert_eq!(c.membership(&rv(&[0, -1])), Membership::NotInCone);
        assert_eq!(c.membership(&rv(&[0, 0])), Membership::Zero);
    }

    #[test]
    fn lex_order_one_dimensional_is_sign() {
        let c = lex_order(&[rv(&[2])]).unwrap();
        assert_eq!(c.membership(&rv(&[5])), Membership::PositiveNonzero);
        assert_eq!(c.membership(&rv(&[-1])), Membership::NotInCone);
    }

    #[test]
    fn lex_order_trichotomy_on_grid() {
        let c = lex_order(&[rv(&[1, 1]), rv(&[1, -1])]).unwrap();
        for a in -3i64..=3 {
            for b in -3i64..=3 {
                let x = rv(&[a, b]);
                let m = c.membership(&x);
                let n = c.membership(&x.neg());
                if x.is_zero() {
                    assert_eq!(m, Membership::Zero);
                } else {
                    // Exactly one of x, -x is positive.
                    assert!(
                        (m == Membership::PositiveNonzero) ^ (n == Membership::PositiveNonzero)
                    );
                }
            }
        }
    }

    #[test]
    fn totalization_matches_closed_form_halfplane() {
        // The orthant in the plane with the halved-sum state refines to
        // {a + b > 0} plus the ray {(a, -a) : a >= 0}.
        let g = orthant(2);
        let tau = halved_trace(&g);
        let t = totalize_with_state(&g, &tau, None).unwrap();
        for a in -10i64..=10 {
            for b in -10i64..=10 {
                let x = rv(&[a, b]);
                let expected = a + b > 0 || (a + b == 0 && a >= 0);
                let got = cone_contains(&t.group, &x) != Membership::NotInCone;
                assert_eq!(got, expected, "at ({a},{b})");
            }
        }
    }

    #[test]
    fn totalized_state_set_is_singleton_tau() {
        let g = orthant(2);
        let tau = halved_trace(&g);
        let t = totalize_with_state(&g, &tau, None).unwrap();
        match state_set(&t.group) {
            StateSet::Singleton(s) => assert_eq!(s.functional(), tau.functional()),
            other => panic!("expected singleton, got {:?}", other),
        }
    }

    #[test]
    fn non_faithful_state_rejected() {
        let g = orthant(2);
        let tau = State::for_group(&g, rv(&[1, 0])).unwrap();
        assert!(matches!(
            totalize_with_state(&g, &tau, None),
            Err(TotalizeError::NotFaithful(_))
        ));
    }

    #[test]
    fn placement_signs_on_antidiagonal() {
        let g = orthant(2);
        let tau = halved_trace(&g);
        let r = placements(&g, &tau, None, &rv(&[1, -1])).unwrap();
        assert_eq!(r.sign_forward, PlacementSign::Pos);
        assert_eq!(r.sign_reverse, PlacementSign::Neg);
        assert_eq!(r.sign_quotient, PlacementSign::Zero);
    }

    #[test]
    fn placement_rejects_zero_and_nonkernel() {
        let g = orthant(2);
        let tau = halved_trace(&g);
        assert!(placements(&g, &tau, None, &rv(&[0, 0])).is_err());
        assert!(placements(&g, &tau, None, &rv(&[1, 0])).is_err());
    }

    #[test]
    fn doubling_kills_kernel_lines() {
        let g = orthant(2);
        let tau = halved_trace(&g);
        let (doubled, diag) = doubling(&g, &tau, None).unwrap();
        assert!(matches!(
            diagonal_is_singular(&doubled, &diag, &rv(&[1, -1])),
            Singularity::Singular
        ));
        // Off the kernel the diagonal is not singular.
        assert!(matches!(
            diagonal_is_singular(&doubled, &diag, &rv(&[1, 0])),
            Singularity::NotSingular { .. }
        ));
    }

    /// Rank-2 block with the open-half-plane cone, summed with a ray.
    fn halfplane_ray_sum() -> ScaledOrderedGroup {
        let half = Cone::lex(2, vec![rv(&[1, 0])], LexTail::ZeroOnly);
        let ray = Cone::fin_gen(1, vec![rv(&[1])]);
        ScaledOrderedGroup::new(Cone::direct_sum(vec![half, ray]), rv(&[1, 0, 1])).unwrap()
    }

    #[test]
    fn kill_check_blocked_by_forced_generator() {
        let g = halfplane_ray_sum();
        match faithful_kill_check(&g, &rv(&[0, 1, -1]), None) {
            KillVerdict::NotKillable { blocking } => {
                assert_eq!(blocking, rv(&[0, 0, 1]));
            }
            other => panic!("expected NotKillable, got {:?}", other),
        }
    }

    #[test]
    fn kill_check_with_empty_strict_set() {
        let g = halfplane_ray_sum();
        assert!(matches!(
            faithful_kill_check(&g, &rv(&[0, 1, -1]), Some(&[])),
            KillVerdict::Killable(_)
        ));
    }

    #[test]
    fn kill_check_simplicial_cone_is_killable() {
        let g = orthant(2);
        match faithful_kill_check(&g, &rv(&[1, -1]), None) {
            KillVerdict::Killable(s) => {
                assert!(s.eval(&rv(&[1, -1])).is_zero());
                assert!(s.eval(&rv(&[1, 0])).is_positive());
            }
            other => panic!("expected Killable, got {:?}", other),
        }
    }
}

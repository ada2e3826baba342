//! Scaled ordered abelian groups over the rationals.
//!
//! A group here is a finite-dimensional `Q`-vector space together with
//! a positive cone and an order unit. Three cone families are
//! supported: finitely generated cones, lexicographic cones built from
//! an ordered list of functionals (these model total orders and the
//! "open half-space plus origin" cones arising as `K`-theoretic
//! positive cones of spheres), and direct sums of the two. Modelling
//! everything as `Q`-vector spaces keeps singularity, quotient and
//! state queries decidable by exact linear programming; torsion is
//! deliberately outside the data model, so hypotheses that exclude
//! torsion elements elsewhere become plain "nonzero" here.

mod pieces;
mod quotient;
mod state;

pub use pieces::{is_singular, Singularity};
pub use quotient::{
    is_maximally_singular, maximalize, maximalize_exact, quotient_order, MaximalFlag,
    MaximalVerdict, Maximalized, QuotientError,
};
pub use state::{
    canonical_state, find_state, infinitesimals, polytope_vertices, state_set, state_vertices,
    FindStateError, StatePolytope, StateSet,
};
pub(crate) use state::kill_with_strictness;

use num_traits::{One, Signed, Zero};

use crate::ratlin::{
    lp, row_space_basis, saturation, LinConstraint, LpOutcome, Rat, RatVec, Saturation,
    Strictness,
};

/// What a lexicographic cone does with vectors on which every
/// functional vanishes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LexTail {
    /// Only the zero vector is admitted: partial functional lists give
    /// "open cone plus origin" shapes, full-rank lists a total order.
    ZeroOnly,
    /// The whole common kernel is admitted. Proper only when the
    /// functionals have full rank.
    AllOfKernel,
}

/// A positive cone over `Q^dim`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Cone {
    /// Nonnegative rational combinations of finitely many generators.
    FinGen { dim: usize, generators: Vec<RatVec> },
    /// Vectors whose functional-value sequence is lexicographically
    /// positive, together with the tail rule on the common kernel.
    Lex {
        dim: usize,
        functionals: Vec<RatVec>,
        tail: LexTail,
    },
    /// Coordinatewise membership over consecutive blocks.
    DirectSum { summands: Vec<Cone> },
}

/// Exact membership trichotomy.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Membership {
    Zero,
    PositiveNonzero,
    NotInCone,
}

impl Cone {
    /// A finitely generated cone; generators are normalized to
    /// primitive integer rays with duplicates and zeros dropped.
    pub fn fin_gen(dim: usize, generators: Vec<RatVec>) -> Cone {
        let mut seen = std::collections::BTreeSet::new();
        let mut gens = Vec::new();
        for g in generators {
            assert_eq!(g.len(), dim, "generator dimension mismatch");
            let g = g.primitive();
            if !g.is_zero() && seen.insert(g.clone()) {
                gens.push(g);
            }
        }
        Cone::FinGen {
            dim,
            generators: gens,
        }
    }

    pub fn lex(dim: usize, functionals: Vec<RatVec>, tail: LexTail) -> Cone {
        for f in &functionals {
            assert_eq!(f.len(), dim, "functional dimension mismatch");
        }
        Cone::Lex {
            dim,
            functionals,
            tail,
        }
    }

    pub fn direct_sum(summands: Vec<Cone>) -> Cone {
        Cone::DirectSum { summands }
    }

    pub fn dim(&self) -> usize {
        match self {
            Cone::FinGen { dim, .. } | Cone::Lex { dim, .. } => *dim,
            Cone::DirectSum { summands } => summands.iter().map(Cone::dim).sum(),
        }
    }

    /// Membership of `x`, deciding finitely generated cones by LP and
    /// lexicographic cones by functional evaluation.
    pub fn membership(&self, x: &RatVec) -> Membership {
        assert_eq!(x.len(), self.dim(), "membership: dimension mismatch");
        if x.is_zero() {
            return Membership::Zero;
        }
        match self {
            Cone::FinGen { generators, .. } => {
                if crate::ratlin::in_generated_cone(generators, x) {
                    Membership::PositiveNonzero
                } else {
                    Membership::NotInCone
                }
            }
            Cone::Lex {
                functionals, tail, ..
            } => {
                for f in functionals {
                    let v = f.dot(x);
                    if v.is_positive() {
                        return Membership::PositiveNonzero;
                    }
                    if v.is_negative() {
                        return Membership::NotInCone;
                    }
                }
                match tail {
                    LexTail::ZeroOnly => Membership::NotInCone,
                    LexTail::AllOfKernel => Membership::PositiveNonzero,
                }
            }
            Cone::DirectSum { summands } => {
                let mut any_positive = false;
                let mut offset = 0;
                for c in summands {
                    let d = c.dim();
                    match c.membership(&x.slice(offset..offset + d)) {
                        Membership::NotInCone => return Membership::NotInCone,
                        Membership::PositiveNonzero => any_positive = true,
                        Membership::Zero => {}
                    }
                    offset += d;
                }
                if any_positive {
                    Membership::PositiveNonzero
                } else {
                    Membership::Zero
                }
            }
        }
    }

    /// Coordinate ranges of the direct summands (a single range for
    /// non-sum cones).
    pub fn summand_ranges(&self) -> Vec<std::ops::Range<usize>> {
        match self {
            Cone::DirectSum { summands } => {
                let mut out = Vec::new();
                let mut offset = 0;
                for c in summands {
                    out.push(offset..offset + c.dim());
                    offset += c.dim();
                }
                out
            }
            _ => vec![0..self.dim()],
        }
    }

    /// True for finitely generated cones and direct sums of them.
    pub fn is_fin_gen_family(&self) -> bool {
        match self {
            Cone::FinGen { .. } => true,
            Cone::Lex { .. } => false,
            Cone::DirectSum { summands } => summands.iter().all(Cone::is_fin_gen_family),
        }
    }

    /// Generators of a finitely generated cone (or direct sum of
    /// such), embedded into the full coordinate space.
    pub fn embedded_generators(&self) -> Option<Vec<RatVec>> {
        match self {
            Cone::FinGen { generators, .. } => Some(generators.clone()),
            Cone::Lex { .. } => None,
            Cone::DirectSum { summands } => {
                let dim = self.dim();
                let mut out = Vec::new();
                let mut offset = 0;
                for c in summands {
                    let gens = c.embedded_generators()?;
                    for g in gens {
                        let mut e = RatVec::zeros(dim);
                        for i in 0..g.len() {
                            e[offset + i] = g[i].clone();
                        }
                        out.push(e);
                    }
                    offset += c.dim();
                }
                Some(out)
            }
        }
    }

    /// Generators contributed by finitely generated blocks, embedded;
    /// lexicographic blocks contribute nothing. Used as the default
    /// strict set when faithfulness is probed.
    pub fn fin_gen_block_generators(&self) -> Vec<RatVec> {
        match self {
            Cone::FinGen { generators, .. } => generators.clone(),
            Cone::Lex { .. } => Vec::new(),
            Cone::DirectSum { summands } => {
                let dim = self.dim();
                let mut out = Vec::new();
                let mut offset = 0;
                for c in summands {
                    for g in c.fin_gen_block_generators() {
                        let mut e = RatVec::zeros(dim);
                        for i in 0..g.len() {
                            e[offset + i] = g[i].clone();
                        }
                        out.push(e);
                    }
                    offset += c.dim();
                }
                out
            }
        }
    }
}

/// Construction-time violations of the group invariants.
#[derive(Debug, Clone, thiserror::Error)]
pub enum GroupError {
    #[error("unit is not in the positive cone")]
    UnitNotInCone,
    #[error("unit is not an order unit: basis vector {0} is not dominated")]
    NotOrderUnit(usize),
    #[error("cone is improper: {witness:?} and its negative both lie in the cone")]
    ImproperCone { witness: RatVec },
    #[error("lexicographic cone needs a leading functional that is positive at the unit")]
    LexUnitDegenerate,
    #[error("lexicographic cone with AllOfKernel tail needs full-rank functionals")]
    LexImproper,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dim { expected: usize, got: usize },
}

/// A scaled ordered group `(G, G+, u)`: `Q^dim` with a positive cone
/// and an order unit. Construction verifies that the cone is proper,
/// that the unit lies in the cone, and that every basis vector is
/// dominated by a multiple of the unit.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ScaledOrderedGroup {
    dim: usize,
    cone: Cone,
    unit: RatVec,
}

impl ScaledOrderedGroup {
    pub fn new(cone: Cone, unit: RatVec) -> Result<Self, GroupError> {
        let dim = cone.dim();
        if unit.len() != dim {
            return Err(GroupError::Dim {
                expected: dim,
                got: unit.len(),
            });
        }
        validate_cone(&cone)?;
        let g = ScaledOrderedGroup { dim, cone, unit };
        if g.cone.membership(&g.unit) == Membership::NotInCone {
            return Err(GroupError::UnitNotInCone);
        }
        g.check_order_unit()?;
        Ok(g)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cone(&self) -> &Cone {
        &self.cone
    }

    pub fn unit(&self) -> &RatVec {
        &self.unit
    }

    fn check_order_unit(&self) -> Result<(), GroupError> {
        check_order_unit_rec(&self.cone, &self.unit, 0)
    }
}

fn validate_cone(cone: &Cone) -> Result<(), GroupError> {
    match cone {
        Cone::FinGen { dim, generators } => {
            // Properness: no nonnegative combination with positive
            // weight on a nonzero generator sums to zero.
            let m = generators.len();
            for i in 0..m {
                let mut cons = Vec::new();
                for c in 0..*dim {
                    let row: RatVec = generators.iter().map(|g| g[c].clone()).collect();
                    cons.push(LinConstraint::eq(row, Rat::zero()));
                }
                for j in 0..m {
                    cons.push(LinConstraint::ge(RatVec::basis(m, j), Rat::zero()));
                }
                let mut pick = RatVec::zeros(m);
                pick[i] = Rat::one();
                cons.push(LinConstraint::ge(pick, Rat::one()));
                if let LpOutcome::Feasible(_) =
                    lp(None, &cons, Strictness::Weaken).expect("consistent dims")
                {
                    return Err(GroupError::ImproperCone {
                        witness: generators[i].clone(),
                    });
                }
            }
            Ok(())
        }
        Cone::Lex {
            dim,
            functionals,
            tail,
        } => {
            if functionals.is_empty() && *dim > 0 {
                return Err(GroupError::LexUnitDegenerate);
            }
            if *tail == LexTail::AllOfKernel {
                let rank = crate::ratlin::RatMat::from_rows(functionals.clone(), *dim).rank();
                if rank < *dim {
                    return Err(GroupError::LexImproper);
                }
            }
            Ok(())
        }
        Cone::DirectSum { summands } => {
            for c in summands {
                validate_cone(c)?;
            }
            Ok(())
        }
    }
}

fn check_order_unit_rec(cone: &Cone, unit: &RatVec, base: usize) -> Result<(), GroupError> {
    match cone {
        Cone::FinGen { dim, generators } => {
            // For each basis vector e: some t >= 0 and lambda >= 0 give
            // t u - e = G lambda (and likewise +e). Together with
            // u in cone this scales to an integer multiple.
            for i in 0..*dim {
                for sign in [1i64, -1] {
                    let m = generators.len();
                    let mut cons = Vec::new();
                    for c in 0..*dim {
                        // t*u[c] - sum_j lambda_j g_j[c] = sign * e_i[c]
                        let mut row = RatVec::zeros(1 + m);
                        row[0] = unit[c].clone();
                        for (j, g) in generators.iter().enumerate() {
                            row[1 + j] = -g[c].clone();
                        }
                        let rhs = if c == i {
                            crate::ratlin::rint(sign)
                        } else {
                            Rat::zero()
                        };
                        cons.push(LinConstraint::eq(row, rhs));
                    }
                    for j in 0..=m {
                        cons.push(LinConstraint::ge(RatVec::basis(1 + m, j), Rat::zero()));
                    }
                    match lp(None, &cons, Strictness::Weaken).expect("consistent dims") {
                        LpOutcome::Feasible(_) => {}
                        _ => return Err(GroupError::NotOrderUnit(base + i)),
                    }
                }
            }
            Ok(())
        }
        Cone::Lex { functionals, .. } => {
            // Structurally: the leading functional must be positive at
            // the unit; then large multiples of the unit dominate
            // everything lexicographically.
            let f1 = functionals.first().ok_or(GroupError::LexUnitDegenerate)?;
            if f1.dot(unit).is_positive() {
                Ok(())
            } else {
                Err(GroupError::LexUnitDegenerate)
            }
        }
        Cone::DirectSum { summands } => {
            let mut offset = 0;
            for c in summands {
                let d = c.dim();
                check_order_unit_rec(c, &unit.slice(offset..offset + d), base + offset)?;
                offset += d;
            }
            Ok(())
        }
    }
}

/// Membership trichotomy of `x` in the positive cone of `g`.
pub fn cone_contains(g: &ScaledOrderedGroup, x: &RatVec) -> Membership {
    g.cone().membership(x)
}

/// How a subgroup's generator list is to be read.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SpanKind {
    /// Integer combinations of the generators.
    ZSpan,
    /// Rational span; stored as a reduced (RREF) basis.
    QSpan,
}

/// A finitely generated subgroup of the ambient `Q^dim`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subgroup {
    ambient_dim: usize,
    generators: Vec<RatVec>,
    span_kind: SpanKind,
}

impl Subgroup {
    pub fn zspan(ambient_dim: usize, generators: Vec<RatVec>) -> Subgroup {
        for g in &generators {
            assert_eq!(g.len(), ambient_dim, "generator dimension mismatch");
        }
        Subgroup {
            ambient_dim,
            generators,
            span_kind: SpanKind::ZSpan,
        }
    }

    /// Rational span, reduced to its canonical echelon basis.
    pub fn qspan(ambient_dim: usize, generators: Vec<RatVec>) -> Subgroup {
        for g in &generators {
            assert_eq!(g.len(), ambient_dim, "generator dimension mismatch");
        }
        Subgroup {
            ambient_dim,
            generators: row_space_basis(&generators, ambient_dim),
            span_kind: SpanKind::QSpan,
        }
    }

    pub fn zero(ambient_dim: usize) -> Subgroup {
        Subgroup::qspan(ambient_dim, Vec::new())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn generators(&self) -> &[RatVec] {
        &self.generators
    }

    pub fn span_kind(&self) -> SpanKind {
        self.span_kind
    }

    /// Canonical basis of the rational span (the singularity verdict
    /// of a `Z`-span equals that of its `Q`-span, since any nonzero
    /// rational cone point in the span scales into the lattice).
    pub fn qspan_basis(&self) -> Vec<RatVec> {
        match self.span_kind {
            SpanKind::QSpan => self.generators.clone(),
            SpanKind::ZSpan => row_space_basis(&self.generators, self.ambient_dim),
        }
    }

    /// The same subgroup read rationally.
    pub fn saturate(&self) -> Subgroup {
        Subgroup::qspan(self.ambient_dim, self.generators.clone())
    }

    pub fn rank(&self) -> usize {
        self.qspan_basis().len()
    }

    pub fn contains(&self, x: &RatVec) -> bool {
        match self.span_kind {
            SpanKind::QSpan => crate::ratlin::in_span(&self.generators, x),
            SpanKind::ZSpan => crate::ratlin::zspan_contains(&self.generators, x),
        }
    }
}

/// Saturation verdict for a `Z`-span, after clearing denominators.
#[derive(Clone, Debug)]
pub enum Divisibility {
    Holds,
    /// `witness` is outside the span while `k * witness` is inside.
    Fails { witness: RatVec, k: num_bigint::BigInt },
}

/// Whether the `Z`-span is saturated inside its rational span (taken
/// relative to the integer lattice after clearing denominators).
/// `Q`-spans hold trivially. A failing subgroup would give a torsion
/// quotient, which the quotient construction rejects.
pub fn satisfies_divisibility(h: &Subgroup) -> Divisibility {
    match h.span_kind {
        SpanKind::QSpan => Divisibility::Holds,
        SpanKind::ZSpan => match saturation(h.generators(), h.ambient_dim()) {
            Saturation::Holds => Divisibility::Holds,
            Saturation::Fails { witness, k } => Divisibility::Fails { witness, k },
        },
    }
}

/// A state: a rational functional, nonnegative on the cone and
/// normalized to 1 at the unit.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct State {
    functional: RatVec,
}

impl State {
    /// Validates the state axioms against `g`: unit value 1, and
    /// nonnegativity on the cone (checked on generators for finitely
    /// generated blocks, structurally for lexicographic ones).
    pub fn for_group(g: &ScaledOrderedGroup, functional: RatVec) -> Result<State, StateError> {
        if functional.len() != g.dim() {
            return Err(StateError::Dim {
                expected: g.dim(),
                got: functional.len(),
            });
        }
        if functional.dot(g.unit()) != Rat::one() {
            return Err(StateError::UnitNotNormalized);
        }
        check_nonneg_on_cone(g.cone(), &functional, 0)?;
        Ok(State { functional })
    }

    pub fn functional(&self) -> &RatVec {
        &self.functional
    }

    pub fn eval(&self, x: &RatVec) -> Rat {
        self.functional.dot(x)
    }

    /// Strict positivity on every nonzero generator of the finitely
    /// generated blocks; any nonzero cone element has positive weight
    /// on some generator, so this implies faithfulness.
    pub fn is_faithful_on(&self, g: &ScaledOrderedGroup) -> bool {
        g.cone()
            .fin_gen_block_generators()
            .iter()
            .all(|gen| self.eval(gen).is_positive())
    }
}

#[derive(Debug, Clone, thiserror::Error)]
pub enum StateError {
    #[error("functional does not evaluate to 1 at the unit")]
    UnitNotNormalized,
    #[error("functional is negative on the cone element {0:?}")]
    NegativeOnCone(RatVec),
    #[error("lexicographic block admits only multiples of its leading functional")]
    NotLexMultiple,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dim { expected: usize, got: usize },
}

fn check_nonneg_on_cone(cone: &Cone, phi: &RatVec, offset: usize) -> Result<(), StateError> {
    match cone {
        Cone::FinGen { dim, generators } => {
            for g in generators {
                let mut acc = Rat::zero();
                for i in 0..*dim {
                    acc += &phi[offset + i] * &g[i];
                }
                if acc.is_negative() {
                    return Err(StateError::NegativeOnCone(g.clone()));
                }
            }
            Ok(())
        }
        Cone::Lex {
            dim, functionals, ..
        } => {
            // A functional nonnegative on a lexicographic cone is a
            // nonnegative multiple of the leading functional.
            let block: RatVec = (0..*dim).map(|i| phi[offset + i].clone()).collect();
            if block.is_zero() {
                return Ok(());
            }
            let f1 = &functionals[0];
            // block = c * f1 with c >= 0.
            let mut c: Option<Rat> = None;
            for i in 0..*dim {
                if !f1[i].is_zero() {
                    c = Some(&block[i] / &f1[i]);
                    break;
                }
            }
            let Some(c) = c else {
                return Err(StateError::NotLexMultiple);
            };
            if c.is_negative() || block != f1.scale(&c) {
                return Err(StateError::NotLexMultiple);
            }
            Ok(())
        }
        Cone::DirectSum { summands } => {
            let mut off = offset;
            for c in summands {
                check_nonneg_on_cone(c, phi, off)?;
                off += c.dim();
            }
            Ok(())
        }
    }
}

/// Direct sum: concatenated coordinates and unit, summand cones kept
/// blockwise.
pub fn direct_sum(groups: &[ScaledOrderedGroup]) -> ScaledOrderedGroup {
    assert!(!groups.is_empty(), "direct sum of no groups");
    if groups.len() == 1 {
        return groups[0].clone();
    }
    let cone = Cone::direct_sum(groups.iter().map(|g| g.cone().clone()).collect());
    let mut unit = RatVec::zeros(0);
    for g in groups {
        unit = unit.concat(g.unit());
    }
    ScaledOrderedGroup::new(cone, unit).expect("summand invariants carry over")
}

/// Re-reads an integer-generated cone over `Q`: generators are
/// saturated under positive rational scaling (normalized to primitive
/// rays), leaving membership unchanged. Records the reduction from
/// integral data to the divisible model used throughout.
pub fn rationalize(g: &ScaledOrderedGroup) -> ScaledOrderedGroup {
    fn rebuild(cone: &Cone) -> Cone {
        match cone {
            Cone::FinGen { dim, generators } => Cone::fin_gen(*dim, generators.clone()),
            Cone::Lex { .. } => cone.clone(),
            Cone::DirectSum { summands } => {
                Cone::direct_sum(summands.iter().map(rebuild).collect())
            }
        }
    }
    ScaledOrderedGroup::new(rebuild(g.cone()), g.unit().clone())
        .expect("normalization preserves the invariants")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratlin::rint;

    fn rv(v: &[i64]) -> RatVec {
        RatVec::from_ints(v)
    }

    pub(crate) fn orthant(dim: usize) -> ScaledOrderedGroup {
        let gens = (0..dim).map(|i| RatVec::basis(dim, i)).collect();
        ScaledOrderedGroup::new(Cone::fin_gen(dim, gens), RatVec::new(vec![Rat::one(); dim]))
            .unwrap()
    }

    /// The motivating non-simple example: a rank-2 block whose cone is
    /// the open right half-plane plus the origin, summed with a ray.
    pub(crate) fn halfplane_ray_sum() -> ScaledOrderedGroup {
        let half = Cone::lex(2, vec![rv(&[1, 0])], LexTail::ZeroOnly);
        let ray = Cone::fin_gen(1, vec![rv(&[1])]);
        ScaledOrderedGroup::new(Cone::direct_sum(vec![half, ray]), rv(&[1, 0, 1])).unwrap()
    }

    #[test]
    fn halfplane_membership_matches_closed_form() {
        let g = halfplane_ray_sum();
        assert_eq!(cone_contains(&g, &rv(&[1, 5, 0])), Membership::PositiveNonzero);
        assert_eq!(cone_contains(&g, &rv(&[0, 1, 0])), Membership::NotInCone);
        assert_eq!(cone_contains(&g, &rv(&[0, 0, 0])), Membership::Zero);
        assert_eq!(cone_contains(&g, &rv(&[1, -7, 2])), Membership::PositiveNonzero);
        assert_eq!(cone_contains(&g, &rv(&[0, 0, 1])), Membership::PositiveNonzero);
        assert_eq!(cone_contains(&g, &rv(&[1, 0, -1])), Membership::NotInCone);
    }

    #[test]
    fn improper_cone_rejected() {
        let c = Cone::fin_gen(2, vec![rv(&[1, 0]), rv(&[-1, 0]), rv(&[0, 1])]);
        assert!(matches!(
            ScaledOrderedGroup::new(c, rv(&[0, 1])),
            Err(GroupError::ImproperCone { .. })
        ));
    }

    #[test]
    fn non_order_unit_rejected() {
        // The ray cone in the plane cannot dominate the second axis.
        let c = Cone::fin_gen(2, vec![rv(&[1, 0])]);
        assert!(matches!(
            ScaledOrderedGroup::new(c, rv(&[1, 0])),
            Err(GroupError::NotOrderUnit(_))
        ));
    }

    #[test]
    fn lex_group_needs_positive_leading_value() {
        let c = Cone::lex(2, vec![rv(&[1, 0])], LexTail::ZeroOnly);
        assert!(ScaledOrderedGroup::new(c.clone(), rv(&[0, 1])).is_err());
        assert!(ScaledOrderedGroup::new(c, rv(&[1, 1])).is_ok());
    }

    #[test]
    fn divisibility_examples() {
        let h2 = Subgroup::zspan(2, vec![rv(&[2, 0])]);
        match satisfies_divisibility(&h2) {
            Divisibility::Fails { witness, k } => {
                assert_eq!(k, num_bigint::BigInt::from(2));
                assert!(!h2.contains(&witness));
                assert!(h2.contains(&witness.scale(&rint(2))));
            }
            Divisibility::Holds => panic!("index-2 lattice must fail"),
        }
        let full = Subgroup::zspan(2, vec![rv(&[1, 0]), rv(&[0, 1])]);
        assert!(matches!(satisfies_divisibility(&full), Divisibility::Holds));
    }

    #[test]
    fn state_validation() {
        let g = orthant(2);
        assert!(State::for_group(&g, RatVec::new(vec![rat_half(), rat_half()])).is_ok());
        assert!(State::for_group(&g, rv(&[1, 0])).is_ok());
        assert!(State::for_group(&g, rv(&[2, -1])).is_err());
        assert!(State::for_group(&g, rv(&[1, 1])).is_err());
    }

    fn rat_half() -> Rat {
        crate::ratlin::rat(1, 2)
    }

    #[test]
    fn direct_sum_membership_is_componentwise() {
        let g = direct_sum(&[orthant(1), orthant(2)]);
        assert_eq!(cone_contains(&g, &rv(&[1, 0, 2])), Membership::PositiveNonzero);
        assert_eq!(cone_contains(&g, &rv(&[1, -1, 2])), Membership::NotInCone);
        assert_eq!(cone_contains(&g, &rv(&[0, 0, 0])), Membership::Zero);
    }

    #[test]
    fn rationalize_keeps_rays() {
        let c = Cone::fin_gen(2, vec![rv(&[2, 0]), rv(&[0, 3])]);
        let g = ScaledOrderedGroup::new(c, rv(&[1, 1])).unwrap();
        let r = rationalize(&g);
        assert_eq!(
            r.cone(),
            &Cone::fin_gen(2, vec![rv(&[1, 0]), rv(&[0, 1])])
        );
    }
}

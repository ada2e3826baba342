//! Polyhedral piece decomposition of cones and exact singularity.
//!
//! A subgroup `H` is singular when `span(H)` meets the cone only at the
//! origin. Finitely generated cones are a single polyhedral piece
//! (with combination multipliers as auxiliary variables);
//! lexicographic cones split into one piece per leading-functional
//! branch plus a tail piece; direct sums multiply out blockwise. The
//! search for a nonzero intersection point then runs one strict or
//! coordinate-normalized LP per piece.

use num_traits::{One, Zero};

use crate::ratlin::{lp, LinConstraint, LpOutcome, Rat, RatVec, Strictness};

use super::{Cone, LexTail, ScaledOrderedGroup, Subgroup};

/// One polyhedral piece of a cone: rows act on the cone's coordinates
/// followed by `aux` auxiliary variables.
#[derive(Clone, Debug)]
pub(crate) struct Piece {
    pub aux: usize,
    pub eqs: Vec<RatVec>,
    pub weak: Vec<RatVec>,
    pub strict: Vec<RatVec>,
}

impl Cone {
    /// Pieces covering the cone exactly (their union is the cone; each
    /// piece is given by equalities, weak and strict inequalities).
    pub(crate) fn pieces(&self) -> Vec<Piece> {
        match self {
            Cone::FinGen { dim, generators } => {
                let m = generators.len();
                let mut eqs = Vec::new();
                for i in 0..*dim {
                    let mut row = RatVec::zeros(dim + m);
                    row[i] = Rat::one();
                    for (j, g) in generators.iter().enumerate() {
                        row[dim + j] = -g[i].clone();
                    }
                    eqs.push(row);
                }
                let weak = (0..m).map(|j| RatVec::basis(dim + m, dim + j)).collect();
                vec![Piece {
                    aux: m,
                    eqs,
                    weak,
                    strict: Vec::new(),
                }]
            }
            Cone::Lex {
                dim,
                functionals,
                tail,
            } => {
                let mut out = Vec::new();
                for j in 0..functionals.len() {
                    out.push(Piece {
                        aux: 0,
                        eqs: functionals[..j].to_vec(),
                        weak: Vec::new(),
                        strict: vec![functionals[j].clone()],
                    });
                }
                let tail_eqs = match tail {
                    // Only the origin: pin every coordinate.
                    LexTail::ZeroOnly => (0..*dim).map(|i| RatVec::basis(*dim, i)).collect(),
                    LexTail::AllOfKernel => functionals.clone(),
                };
                out.push(Piece {
                    aux: 0,
                    eqs: tail_eqs,
                    weak: Vec::new(),
                    strict: Vec::new(),
                });
                out
            }
            Cone::DirectSum { summands } => {
                let dim = self.dim();
                let mut combined = vec![Piece {
                    aux: 0,
                    eqs: Vec::new(),
                    weak: Vec::new(),
                    strict: Vec::new(),
                }];
                let mut offset = 0;
                for c in summands {
                    let block = c.pieces();
                    let mut next = Vec::new();
                    for acc in &combined {
                        for p in &block {
                            next.push(product(acc, p, dim, offset, c.dim()));
                        }
                    }
                    combined = next;
                    offset += c.dim();
                }
                combined
            }
        }
    }
}

/// Embeds `p` (over a block of width `block_dim` at `offset`) after
/// `acc`, concatenating auxiliary variables.
fn product(acc: &Piece, p: &Piece, dim: usize, offset: usize, block_dim: usize) -> Piece {
    let embed = |row: &RatVec, aux_before: usize, total_aux: usize| -> RatVec {
        let mut out = RatVec::zeros(dim + total_aux);
        for i in 0..block_dim {
            out[offset + i] = row[i].clone();
        }
        for a in 0..(row.len() - block_dim) {
            out[dim + aux_before + a] = row[block_dim + a].clone();
        }
        out
    };
    let total_aux = acc.aux + p.aux;
    let widen = |row: &RatVec| -> RatVec {
        let mut out = RatVec::zeros(dim + total_aux);
        for i in 0..dim.min(row.len()) {
            out[i] = row[i].clone();
        }
        for a in 0..(row.len().saturating_sub(dim)) {
            out[dim + a] = row[dim + a].clone();
        }
        out
    };
    Piece {
        aux: total_aux,
        eqs: acc
            .eqs
            .iter()
            .map(&widen)
            .chain(p.eqs.iter().map(|r| embed(r, acc.aux, total_aux)))
            .collect(),
        weak: acc
            .weak
            .iter()
            .map(&widen)
            .chain(p.weak.iter().map(|r| embed(r, acc.aux, total_aux)))
            .collect(),
        strict: acc
            .strict
            .iter()
            .map(&widen)
            .chain(p.strict.iter().map(|r| embed(r, acc.aux, total_aux)))
            .collect(),
    }
}

/// Verdict of [`is_singular`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Singularity {
    Singular,
    /// A nonzero element of both the span and the cone.
    NotSingular { witness: RatVec },
}

/// Whether `span(h)` meets the positive cone of `g` only at zero. For
/// `Z`-spans the verdict equals that of the rational span: a nonzero
/// rational cone point in the span scales to a lattice point.
pub fn is_singular(g: &ScaledOrderedGroup, h: &Subgroup) -> Singularity {
    let basis = h.qspan_basis();
    if basis.is_empty() {
        return Singularity::Singular;
    }
    let dim = g.dim();
    assert_eq!(h.ambient_dim(), dim, "subgroup dimension mismatch");
    let k = basis.len();
    for piece in g.cone().pieces() {
        // Variables: (x, piece aux, alpha) with x = B^T alpha.
        let total = dim + piece.aux + k;
        let widen = |row: &RatVec| -> RatVec {
            let mut out = RatVec::zeros(total);
            for i in 0..row.len() {
                out[i] = row[i].clone();
            }
            out
        };
        let mut cons: Vec<LinConstraint> = Vec::new();
        for r in &piece.eqs {
            cons.push(LinConstraint::eq(widen(r), Rat::zero()));
        }
        for r in &piece.weak {
            cons.push(LinConstraint::ge(widen(r), Rat::zero()));
        }
        for i in 0..dim {
            let mut row = RatVec::zeros(total);
            row[i] = Rat::one();
            for (j, b) in basis.iter().enumerate() {
                row[dim + piece.aux + j] = -b[i].clone();
            }
            cons.push(LinConstraint::eq(row, Rat::zero()));
        }
        if piece.strict.is_empty() {
            // Search for a nonzero x coordinatewise; pieces without
            // strict rows are closed cones, so scaling normalizes any
            // nonzero point to |x_c| >= 1.
            for c in 0..dim {
                for sign in [1i64, -1] {
                    let mut extra = RatVec::zeros(total);
                    extra[c] = crate::ratlin::rint(sign);
                    let mut sys = cons.clone();
                    sys.push(LinConstraint::ge(extra, Rat::one()));
                    if let LpOutcome::Feasible(p) =
                        lp(None, &sys, Strictness::Weaken).expect("consistent dims")
                    {
                        return not_singular(g, p.slice(0..dim));
                    }
                }
            }
        } else {
            let mut sys = cons.clone();
            for r in &piece.strict {
                sys.push(LinConstraint::gt(widen(r), Rat::zero()));
            }
            if let LpOutcome::Feasible(p) =
                lp(None, &sys, Strictness::TwoPhase).expect("consistent dims")
            {
                return not_singular(g, p.slice(0..dim));
            }
        }
    }
    Singularity::Singular
}

fn not_singular(g: &ScaledOrderedGroup, witness: RatVec) -> Singularity {
    debug_assert!(!witness.is_zero());
    debug_assert_ne!(
        g.cone().membership(&witness),
        super::Membership::NotInCone,
        "witness must lie in the cone"
    );
    Singularity::NotSingular {
        witness: witness.primitive(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordgrp::tests::{halfplane_ray_sum, orthant};
    use crate::ordgrp::Membership;

    fn rv(v: &[i64]) -> RatVec {
        RatVec::from_ints(v)
    }

    #[test]
    fn zero_subgroup_is_singular() {
        let g = orthant(3);
        assert_eq!(is_singular(&g, &Subgroup::zero(3)), Singularity::Singular);
    }

    #[test]
    fn cone_generator_span_is_not_singular() {
        let g = orthant(2);
        let h = Subgroup::qspan(2, vec![rv(&[1, 0])]);
        match is_singular(&g, &h) {
            Singularity::NotSingular { witness } => {
                assert!(h.contains(&witness));
                assert_eq!(g.cone().membership(&witness), Membership::PositiveNonzero);
            }
            Singularity::Singular => panic!("generator span meets the cone"),
        }
    }

    #[test]
    fn antidiagonal_is_singular_in_orthant() {
        let g = orthant(2);
        let h = Subgroup::qspan(2, vec![rv(&[1, -1])]);
        assert_eq!(is_singular(&g, &h), Singularity::Singular);
    }

    #[test]
    fn halfplane_ray_sum_kill_line_is_singular() {
        // The line through (0, 1, -1) misses the cone of the
        // half-plane/ray sum entirely.
        let g = halfplane_ray_sum();
        let h = Subgroup::qspan(3, vec![rv(&[0, 1, -1])]);
        assert_eq!(is_singular(&g, &h), Singularity::Singular);
    }

    #[test]
    fn halfplane_ray_sum_infinitesimal_line_is_singular() {
        let g = halfplane_ray_sum();
        let h = Subgroup::qspan(3, vec![rv(&[0, 1, 0])]);
        assert_eq!(is_singular(&g, &h), Singularity::Singular);
    }

    #[test]
    fn zspan_and_qspan_verdicts_agree() {
        let g = orthant(2);
        let hz = Subgroup::zspan(2, vec![rv(&[2, -2])]);
        let hq = hz.saturate();
        assert_eq!(is_singular(&g, &hz), is_singular(&g, &hq));
    }

    #[test]
    fn lex_total_order_admits_no_singular_line() {
        // A full-rank lexicographic cone is a total order: every line
        // meets it.
        let c = Cone::lex(2, vec![rv(&[1, 0]), rv(&[0, 1])], LexTail::ZeroOnly);
        let g = ScaledOrderedGroup::new(c, rv(&[1, 0])).unwrap();
        let h = Subgroup::qspan(2, vec![rv(&[0, 1])]);
        assert!(matches!(
            is_singular(&g, &h),
            Singularity::NotSingular { .. }
        ));
    }
}

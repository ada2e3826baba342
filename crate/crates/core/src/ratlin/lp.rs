//! Exact rational linear programming with certificates.
//!
//! A two-phase dense simplex over `BigRational` using Bland's rule, so
//! termination is guaranteed and every outcome is exact. Variables are
//! free; constraints are `>=`, `>` or `=` rows. Strict rows are decided
//! by the two-phase rule: weaken them to `>=`, then maximize the
//! minimum slack of the strict rows; the system is strictly feasible
//! iff that optimum is positive.
//!
//! Every verdict carries a certificate that can be replayed with plain
//! arithmetic:
//!   * feasible: a point satisfying each row exactly,
//!   * infeasible: Farkas multipliers combining the rows into `0 >= c`
//!     with `c > 0` (or `0 > 0` through a strict row),
//!   * unbounded: a recession ray improving the objective.
//!
//! The solver re-verifies each certificate before returning and panics
//! on a mismatch; a wrong answer never escapes silently.

use num_traits::{One, Signed, Zero};

use super::linalg::{DimMismatch, Rat, RatVec};

/// Relation of a linear constraint row.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Rel {
    Ge,
    Gt,
    Eq,
}

/// `coeffs . x  rel  rhs` over free rational variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinConstraint {
    pub coeffs: RatVec,
    pub rel: Rel,
    pub rhs: Rat,
}

impl LinConstraint {
    pub fn ge(coeffs: RatVec, rhs: Rat) -> Self {
        LinConstraint {
            coeffs,
            rel: Rel::Ge,
            rhs,
        }
    }

    pub fn gt(coeffs: RatVec, rhs: Rat) -> Self {
        LinConstraint {
            coeffs,
            rel: Rel::Gt,
            rhs,
        }
    }

    pub fn eq(coeffs: RatVec, rhs: Rat) -> Self {
        LinConstraint {
            coeffs,
            rel: Rel::Eq,
            rhs,
        }
    }

    /// Exact satisfaction; `strictly` additionally demands strict rows
    /// hold strictly.
    pub fn satisfied_by(&self, x: &RatVec, strictly: bool) -> bool {
        let lhs = self.coeffs.dot(x);
        match self.rel {
            Rel::Ge => lhs >= self.rhs,
            Rel::Gt => {
                if strictly {
                    lhs > self.rhs
                } else {
                    lhs >= self.rhs
                }
            }
            Rel::Eq => lhs == self.rhs,
        }
    }
}

/// How strict rows are handled by [`lp`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Strictness {
    /// Treat `>` rows as `>=`.
    Weaken,
    /// Decide strict feasibility exactly by maximizing the minimum
    /// slack of the strict rows.
    TwoPhase,
}

/// Verdict of [`lp`].
#[derive(Clone, Debug)]
pub enum LpOutcome {
    /// A point satisfying every constraint exactly (strict rows
    /// strictly, under [`Strictness::TwoPhase`]).
    Feasible(RatVec),
    /// Farkas multipliers, one per constraint, refuting the system;
    /// see [`farkas_refutes`] for the exact rule.
    Infeasible(RatVec),
    /// A recession direction along which the objective grows without
    /// bound.
    Unbounded(RatVec),
    /// Optimum of the objective, attained at `point`.
    Bounded { value: Rat, point: RatVec },
}

/// Optimum with dual multipliers, for callers that record optimality
/// certificates. For a maximum `v` of `c . x` over `a_i . x >= b_i`
/// the duals satisfy `y >= 0` on inequality rows,
/// `sum_i y_i a_i = -c` and `v = -sum_i y_i b_i`.
#[derive(Clone, Debug)]
pub enum CertifiedMax {
    Bounded {
        value: Rat,
        point: RatVec,
        duals: RatVec,
    },
    Unbounded {
        ray: RatVec,
    },
    Infeasible {
        farkas: RatVec,
    },
}

/// Checks that `y` refutes `cons`: nonnegative on inequality rows, the
/// combined coefficient vector vanishes, and the combined right-hand
/// side is positive — or zero with positive mass on a strict row, which
/// refutes strict feasibility.
pub fn farkas_refutes(cons: &[LinConstraint], y: &RatVec) -> bool {
    if y.len() != cons.len() {
        return false;
    }
    let Some(dim) = cons.first().map(|c| c.coeffs.len()) else {
        return false;
    };
    let mut combined = RatVec::zeros(dim);
    let mut rhs = Rat::zero();
    let mut strict_mass = Rat::zero();
    for (c, w) in cons.iter().zip(y.iter()) {
        match c.rel {
            Rel::Ge | Rel::Gt => {
                if w.is_negative() {
                    return false;
                }
            }
            Rel::Eq => {}
        }
        combined = combined.add(&c.coeffs.scale(w));
        rhs += w * &c.rhs;
        if c.rel == Rel::Gt {
            strict_mass += w;
        }
    }
    if !combined.is_zero() {
        return false;
    }
    rhs.is_positive() || (rhs.is_zero() && strict_mass.is_positive())
}

/// Solves a linear program over free variables, maximizing `objective`
/// when present. All arithmetic and all verdicts are exact.
pub fn lp(
    objective: Option<&RatVec>,
    cons: &[LinConstraint],
    strictness: Strictness,
) -> Result<LpOutcome, DimMismatch> {
    let dim = match (objective, cons.first()) {
        (Some(f), _) => f.len(),
        (None, Some(c)) => c.coeffs.len(),
        (None, None) => return Ok(LpOutcome::Feasible(RatVec::zeros(0))),
    };
    for c in cons {
        super::linalg::check_dim(dim, c.coeffs.len())?;
    }
    if let Some(f) = objective {
        super::linalg::check_dim(dim, f.len())?;
    }

    let strict = strictness == Strictness::TwoPhase && cons.iter().any(|c| c.rel == Rel::Gt);

    if strict {
        match strict_feasible_point(dim, cons) {
            StrictOutcome::Point(p) => {
                if objective.is_none() {
                    assert!(
                        cons.iter().all(|c| c.satisfied_by(&p, true)),
                        "internal: strict point fails verification"
                    );
                    return Ok(LpOutcome::Feasible(p));
                }
            }
            StrictOutcome::Refuted(y) => {
                assert!(
                    farkas_refutes(cons, &y),
                    "internal: strict farkas fails verification"
                );
                return Ok(LpOutcome::Infeasible(y));
            }
        }
    }

    // Relaxation: strict rows weakened. Under TwoPhase we already know
    // the strict system is feasible here, and optima are reported over
    // the closure.
    match objective {
        None => {
            let enc = Encoding::build(dim, cons, false);
            match enc.feasible() {
                Ok(z) => {
                    let p = enc.decode_point(&z);
                    assert!(
                        cons.iter().all(|c| c.satisfied_by(&p, false)),
                        "internal: feasible point fails verification"
                    );
                    Ok(LpOutcome::Feasible(p))
                }
                Err(y) => {
                    assert!(
                        farkas_refutes(cons, &y),
                        "internal: farkas fails verification"
                    );
                    Ok(LpOutcome::Infeasible(y))
                }
            }
        }
        Some(f) => match lp_max_certified(f, cons)? {
            CertifiedMax::Bounded { value, point, .. } => Ok(LpOutcome::Bounded { value, point }),
            CertifiedMax::Unbounded { ray } => Ok(LpOutcome::Unbounded(ray)),
            CertifiedMax::Infeasible { farkas } => Ok(LpOutcome::Infeasible(farkas)),
        },
    }
}

/// Maximizes `objective` over the weakened system (strict rows read as
/// `>=`), returning dual multipliers on the bounded branch.
pub fn lp_max_certified(
    objective: &RatVec,
    cons: &[LinConstraint],
) -> Result<CertifiedMax, DimMismatch> {
    let dim = objective.len();
    for c in cons {
        super::linalg::check_dim(dim, c.coeffs.len())?;
    }
    let enc = Encoding::build(dim, cons, false);
    Ok(match enc.maximize(objective) {
        MaxResult::Infeasible(y) => {
            assert!(
                farkas_refutes(cons, &y),
                "internal: farkas fails verification"
            );
            CertifiedMax::Infeasible { farkas: y }
        }
        MaxResult::Unbounded(ray_z) => {
            let ray = enc.decode_point(&ray_z);
            let ok = cons.iter().all(|c| {
                let d = c.coeffs.dot(&ray);
                match c.rel {
                    Rel::Ge | Rel::Gt => !d.is_negative(),
                    Rel::Eq => d.is_zero(),
                }
            }) && objective.dot(&ray).is_positive();
            assert!(ok, "internal: unbounded ray fails verification");
            CertifiedMax::Unbounded { ray }
        }
        MaxResult::Optimal { z, duals } => {
            let point = enc.decode_point(&z);
            let value = objective.dot(&point);
            assert!(
                dual_bound_checks(objective, cons, &value, &point, &duals),
                "internal: optimality certificate fails verification"
            );
            CertifiedMax::Bounded {
                value,
                point,
                duals,
            }
        }
    })
}

/// Arithmetic validity of an optimality certificate: `point` feasible
/// attaining `value`, duals nonnegative on inequality rows with
/// `sum y_i a_i = -c` and `value = -sum y_i b_i`.
pub fn dual_bound_checks(
    objective: &RatVec,
    cons: &[LinConstraint],
    value: &Rat,
    point: &RatVec,
    duals: &RatVec,
) -> bool {
    if duals.len() != cons.len() {
        return false;
    }
    if !cons.iter().all(|c| c.satisfied_by(point, false)) {
        return false;
    }
    if &objective.dot(point) != value {
        return false;
    }
    let mut comb = RatVec::zeros(objective.len());
    let mut rhs = Rat::zero();
    for (c, w) in cons.iter().zip(duals.iter()) {
        if c.rel != Rel::Eq && w.is_negative() {
            return false;
        }
        comb = comb.add(&c.coeffs.scale(w));
        rhs += w * &c.rhs;
    }
    comb.add(objective).is_zero() && -rhs == *value
}

enum StrictOutcome {
    Point(RatVec),
    Refuted(RatVec),
}

/// Maximizes the common slack `t` of the strict rows, capped at 1.
fn strict_feasible_point(dim: usize, cons: &[LinConstraint]) -> StrictOutcome {
    let enc = Encoding::build(dim, cons, true);
    let mut obj = RatVec::zeros(dim + 1);
    obj[dim] = Rat::one();
    match enc.maximize(&obj) {
        MaxResult::Infeasible(y) => StrictOutcome::Refuted(y),
        MaxResult::Unbounded(_) => unreachable!("slack is capped"),
        MaxResult::Optimal { z, duals } => {
            let p = enc.decode_point(&z);
            if p[dim].is_positive() {
                StrictOutcome::Point(p.slice(0..dim))
            } else {
                StrictOutcome::Refuted(duals)
            }
        }
    }
}

/// Standard-form encoding: free variables split into positive parts,
/// one surplus column per inequality row, rows flipped to nonnegative
/// right-hand sides. With `with_slack_var` an extra variable `t` is
/// subtracted from every strict row and capped by `t <= 1`.
struct Encoding {
    dim: usize,
    with_slack_var: bool,
    n_structural: usize,
    rows: Vec<RatVec>,
    rhs: Vec<Rat>,
    flip: Vec<bool>,
    /// Per std row: index of the original constraint, or None for the
    /// synthetic cap row.
    origin: Vec<Option<usize>>,
}

impl Encoding {
    fn build(dim: usize, cons: &[LinConstraint], with_slack_var: bool) -> Encoding {
        let nvars = dim + usize::from(with_slack_var);
        let n_ineq = cons.iter().filter(|c| c.rel != Rel::Eq).count();
        let n_structural = 2 * nvars + n_ineq + usize::from(with_slack_var);
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        let mut flip = Vec::new();
        let mut origin = Vec::new();
        let mut surplus = 2 * nvars;

        let mut push_row = |coeffs: RatVec, b: Rat, orig: Option<usize>| {
            if b.is_negative() {
                rows.push(coeffs.neg());
                rhs.push(-b);
                flip.push(true);
            } else {
                rows.push(coeffs);
                rhs.push(b);
                flip.push(false);
            }
            origin.push(orig);
        };

        for (i, c) in cons.iter().enumerate() {
            let mut row = RatVec::zeros(n_structural);
            for j in 0..dim {
                row[j] = c.coeffs[j].clone();
                row[nvars + j] = -c.coeffs[j].clone();
            }
            if with_slack_var && c.rel == Rel::Gt {
                row[dim] = -Rat::one();
                row[nvars + dim] = Rat::one();
            }
            if c.rel != Rel::Eq {
                row[surplus] = -Rat::one();
                surplus += 1;
            }
            push_row(row, c.rhs.clone(), Some(i));
        }
        if with_slack_var {
            // t <= 1
            let mut row = RatVec::zeros(n_structural);
            row[dim] = Rat::one();
            row[nvars + dim] = -Rat::one();
            row[surplus] = Rat::one();
            push_row(row, Rat::one(), None);
        }
        Encoding {
            dim,
            with_slack_var,
            n_structural,
            rows,
            rhs,
            flip,
            origin,
        }
    }

    fn nvars(&self) -> usize {
        self.dim + usize::from(self.with_slack_var)
    }

    fn decode_point(&self, z: &RatVec) -> RatVec {
        let nv = self.nvars();
        (0..nv).map(|j| &z[j] - &z[nv + j]).collect()
    }

    /// Maps standard-form duals back to one multiplier per original
    /// constraint, undoing row flips and dropping synthetic rows.
    fn decode_duals(&self, y_std: &[Rat], n_cons: usize) -> RatVec {
        let mut y = RatVec::zeros(n_cons);
        for (r, orig) in self.origin.iter().enumerate() {
            if let Some(i) = orig {
                y[*i] = if self.flip[r] {
                    -y_std[r].clone()
                } else {
                    y_std[r].clone()
                };
            }
        }
        y
    }

    fn feasible(&self) -> Result<RatVec, RatVec> {
        let mut t = Tableau::phase1(&self.rows, &self.rhs, self.n_structural);
        match t.run(self.n_structural) {
            RunEnd::Optimal => {}
            RunEnd::Unbounded(_) => unreachable!("phase 1 is bounded below"),
        }
        if t.value.is_positive() {
            let y_std = t.duals_phase1();
            Err(self.decode_duals(&y_std, self.origin.iter().flatten().count()))
        } else {
            Ok(t.point())
        }
    }

    fn maximize(&self, objective: &RatVec) -> MaxResult {
        let n_cons = self.origin.iter().flatten().count();
        let mut t = Tableau::phase1(&self.rows, &self.rhs, self.n_structural);
        match t.run(self.n_structural) {
            RunEnd::Optimal => {}
            RunEnd::Unbounded(_) => unreachable!("phase 1 is bounded below"),
        }
        if t.value.is_positive() {
            let y_std = t.duals_phase1();
            return MaxResult::Infeasible(self.decode_duals(&y_std, n_cons));
        }
        t.drive_out_artificials();
        // Phase 2: minimize -objective over structural columns.
        let nv = self.nvars();
        let mut cost = vec![Rat::zero(); self.n_structural];
        for j in 0..objective.len() {
            cost[j] = -objective[j].clone();
            cost[nv + j] = objective[j].clone();
        }
        t.set_costs(&cost);
        match t.run(self.n_structural) {
            RunEnd::Optimal => {
                let y_std = t.duals(&cost);
                MaxResult::Optimal {
                    z: t.point(),
                    duals: self.decode_duals(&y_std, n_cons),
                }
            }
            RunEnd::Unbounded(col) => MaxResult::Unbounded(t.ray(col)),
        }
    }
}

enum MaxResult {
    Optimal { z: RatVec, duals: RatVec },
    Unbounded(RatVec),
    Infeasible(RatVec),
}

enum RunEnd {
    Optimal,
    Unbounded(usize),
}

/// Dense simplex tableau. Columns `0..n_structural` are the encoded
/// problem, the next `m` columns are the phase-1 artificial identity,
/// and artificial columns are barred from re-entering in phase 2.
struct Tableau {
    n_structural: usize,
    m: usize,
    /// m rows of length n_structural + m, kept basis-reduced.
    rows: Vec<RatVec>,
    rhs: Vec<Rat>,
    basis: Vec<usize>,
    cost: RatVec,
    value: Rat,
}

impl Tableau {
    fn phase1(a: &[RatVec], b: &[Rat], n_structural: usize) -> Tableau {
        let m = a.len();
        let total = n_structural + m;
        let mut rows = Vec::with_capacity(m);
        for (i, r) in a.iter().enumerate() {
            let mut row = RatVec::zeros(total);
            for j in 0..n_structural {
                row[j] = r[j].clone();
            }
            row[n_structural + i] = Rat::one();
            rows.push(row);
        }
        // Reduced costs for sum of artificials: c_j - sum over rows.
        let mut cost = RatVec::zeros(total);
        let mut value = Rat::zero();
        for j in 0..total {
            let mut s = Rat::zero();
            for row in &rows {
                s += &row[j];
            }
            let c_j = if j >= n_structural {
                Rat::one()
            } else {
                Rat::zero()
            };
            cost[j] = c_j - s;
        }
        for bi in b {
            value += bi;
        }
        Tableau {
            n_structural,
            m,
            rows,
            rhs: b.to_vec(),
            basis: (n_structural..total).collect(),
            cost,
            value,
        }
    }

    /// Recomputes reduced costs for a new cost vector over structural
    /// columns (artificials cost zero).
    fn set_costs(&mut self, c_structural: &[Rat]) {
        let total = self.n_structural + self.m;
        let full_cost = |j: usize| -> Rat {
            if j < self.n_structural {
                c_structural[j].clone()
            } else {
                Rat::zero()
            }
        };
        let mut cost = RatVec::zeros(total);
        let mut value = Rat::zero();
        for (r, &bv) in self.basis.iter().enumerate() {
            value += full_cost(bv) * &self.rhs[r];
        }
        for j in 0..total {
            let mut s = full_cost(j);
            for (r, &bv) in self.basis.iter().enumerate() {
                let cb = full_cost(bv);
                if !cb.is_zero() {
                    s -= cb * &self.rows[r][j];
                }
            }
            cost[j] = s;
        }
        self.cost = cost;
        self.value = value;
    }

    /// Bland's rule: entering column is the lowest-index eligible one,
    /// leaving row breaks ratio ties by lowest basis index.
    fn run(&mut self, enter_limit: usize) -> RunEnd {
        loop {
            let Some(j) = (0..enter_limit).find(|&j| self.cost[j].is_negative()) else {
                return RunEnd::Optimal;
            };
            let mut leave: Option<usize> = None;
            let mut best: Option<Rat> = None;
            for r in 0..self.m {
                if self.rows[r][j].is_positive() {
                    let ratio = &self.rhs[r] / &self.rows[r][j];
                    let better = match &best {
                        None => true,
                        Some(b) => {
                            ratio < *b
                                || (ratio == *b
                                    && self.basis[r] < self.basis[leave.unwrap()])
                        }
                    };
                    if better {
                        best = Some(ratio);
                        leave = Some(r);
                    }
                }
            }
            let Some(r) = leave else {
                return RunEnd::Unbounded(j);
            };
            self.pivot(r, j);
        }
    }

    fn pivot(&mut self, r: usize, j: usize) {
        let pivot = self.rows[r][j].clone();
        let inv = pivot.recip();
        self.rows[r] = self.rows[r].scale(&inv);
        self.rhs[r] = &self.rhs[r] * &inv;
        for i in 0..self.m {
            if i != r && !self.rows[i][j].is_zero() {
                let f = self.rows[i][j].clone();
                self.rows[i] = self.rows[i].sub(&self.rows[r].scale(&f));
                self.rhs[i] = &self.rhs[i] - &f * &self.rhs[r];
            }
        }
        if !self.cost[j].is_zero() {
            let f = self.cost[j].clone();
            self.cost = self.cost.sub(&self.rows[r].scale(&f));
            self.value = &self.value + &f * &self.rhs[r];
        }
        self.basis[r] = j;
    }

    /// After a zero-value phase 1, pivots basic artificials out on any
    /// nonzero structural entry. Rows with no such entry are redundant
    /// and stay inert: their structural coefficients are all zero, so
    /// later pivots never touch them and their duals vanish.
    fn drive_out_artificials(&mut self) {
        for r in 0..self.m {
            if self.basis[r] >= self.n_structural {
                debug_assert!(self.rhs[r].is_zero());
                if let Some(j) =
                    (0..self.n_structural).find(|&j| !self.rows[r][j].is_zero())
                {
                    self.pivot(r, j);
                }
            }
        }
    }

    fn point(&self) -> RatVec {
        let mut z = RatVec::zeros(self.n_structural + self.m);
        for (r, &bv) in self.basis.iter().enumerate() {
            z[bv] = self.rhs[r].clone();
        }
        z
    }

    /// Recession direction for an entering column with no blocking row.
    fn ray(&self, j: usize) -> RatVec {
        let mut d = RatVec::zeros(self.n_structural + self.m);
        d[j] = Rat::one();
        for (r, &bv) in self.basis.iter().enumerate() {
            d[bv] = -self.rows[r][j].clone();
        }
        d
    }

    /// Duals `y_i = 1 - reduced_cost(artificial_i)` for phase 1.
    fn duals_phase1(&self) -> Vec<Rat> {
        (0..self.m)
            .map(|i| Rat::one() - &self.cost[self.n_structural + i])
            .collect()
    }

    /// Duals `y_i = c_art - reduced_cost(artificial_i)` for a general
    /// cost vector (artificials cost zero).
    fn duals(&self, _c_structural: &[Rat]) -> Vec<Rat> {
        (0..self.m)
            .map(|i| -self.cost[self.n_structural + i].clone())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratlin::linalg::{rat, rint};

    fn c_ge(coeffs: &[i64], rhs: i64) -> LinConstraint {
        LinConstraint::ge(RatVec::from_ints(coeffs), rint(rhs))
    }

    #[test]
    fn maximize_on_segment() {
        // max x s.t. x <= 1, x >= 0 (upper bound written as -x >= -1)
        let cons = vec![c_ge(&[-1], -1), c_ge(&[1], 0)];
        let obj = RatVec::from_ints(&[1]);
        match lp(Some(&obj), &cons, Strictness::TwoPhase).unwrap() {
            LpOutcome::Bounded { value, point } => {
                assert_eq!(value, rint(1));
                assert_eq!(point, RatVec::from_ints(&[1]));
            }
            other => panic!("expected bounded, got {:?}", other),
        }
    }

    #[test]
    fn infeasible_pair_has_unit_farkas() {
        let cons = vec![c_ge(&[1], 1), c_ge(&[-1], 0)];
        match lp(None, &cons, Strictness::TwoPhase).unwrap() {
            LpOutcome::Infeasible(y) => {
                assert!(farkas_refutes(&cons, &y));
                assert_eq!(y.primitive(), RatVec::from_ints(&[1, 1]));
            }
            other => panic!("expected infeasible, got {:?}", other),
        }
    }

    #[test]
    fn unbounded_ray() {
        let cons = vec![c_ge(&[1, 0], 0)];
        let obj = RatVec::from_ints(&[1, 0]);
        match lp(Some(&obj), &cons, Strictness::TwoPhase).unwrap() {
            LpOutcome::Unbounded(ray) => {
                assert!(obj.dot(&ray).is_positive());
            }
            other => panic!("expected unbounded, got {:?}", other),
        }
    }

    #[test]
    fn strict_feasibility_open_interval() {
        // x > 0, x > 1, -x >= -2 : strictly feasible.
        let cons = vec![
            LinConstraint::gt(RatVec::from_ints(&[1]), rint(0)),
            LinConstraint::gt(RatVec::from_ints(&[1]), rint(1)),
            c_ge(&[-1], -2),
        ];
        match lp(None, &cons, Strictness::TwoPhase).unwrap() {
            LpOutcome::Feasible(p) => {
                assert!(p[0] > rint(1) && p[0] <= rint(2));
            }
            other => panic!("expected feasible, got {:?}", other),
        }
    }

    #[test]
    fn strict_infeasibility_on_boundary() {
        // x >= 0, -x >= 0, x > 0 : only x = 0 in the closure.
        let cons = vec![
            c_ge(&[1], 0),
            c_ge(&[-1], 0),
            LinConstraint::gt(RatVec::from_ints(&[1]), rint(0)),
        ];
        match lp(None, &cons, Strictness::TwoPhase).unwrap() {
            LpOutcome::Infeasible(y) => assert!(farkas_refutes(&cons, &y)),
            other => panic!("expected infeasible, got {:?}", other),
        }
        // Weakened, the same system is feasible.
        match lp(None, &cons, Strictness::Weaken).unwrap() {
            LpOutcome::Feasible(p) => assert_eq!(p[0], rint(0)),
            other => panic!("expected feasible, got {:?}", other),
        }
    }

    #[test]
    fn equality_rows() {
        // x + y = 1, x >= 0, y >= 0, max x.
        let cons = vec![
            LinConstraint::eq(RatVec::from_ints(&[1, 1]), rint(1)),
            c_ge(&[1, 0], 0),
            c_ge(&[0, 1], 0),
        ];
        let obj = RatVec::from_ints(&[1, 0]);
        match lp(Some(&obj), &cons, Strictness::TwoPhase).unwrap() {
            LpOutcome::Bounded { value, .. } => assert_eq!(value, rint(1)),
            other => panic!("expected bounded, got {:?}", other),
        }
    }

    #[test]
    fn fractional_data() {
        // max x s.t. 2x <= 1/3  ->  value 1/6.
        let cons = vec![LinConstraint::ge(
            RatVec::from_ints(&[-2]),
            rat(-1, 3),
        )];
        let obj = RatVec::from_ints(&[1]);
        match lp(Some(&obj), &cons, Strictness::TwoPhase).unwrap() {
            LpOutcome::Bounded { value, .. } => assert_eq!(value, rat(1, 6)),
            other => panic!("expected bounded, got {:?}", other),
        }
    }

    #[test]
    fn certified_max_duals_verify() {
        let cons = vec![c_ge(&[-1, -1], -2), c_ge(&[1, 0], 0), c_ge(&[0, 1], 0)];
        let obj = RatVec::from_ints(&[1, 1]);
        match lp_max_certified(&obj, &cons).unwrap() {
            CertifiedMax::Bounded {
                value,
                point,
                duals,
            } => {
                assert_eq!(value, rint(2));
                assert!(dual_bound_checks(&obj, &cons, &value, &point, &duals));
            }
            other => panic!("expected bounded, got {:?}", other),
        }
    }

    #[test]
    fn empty_system_is_feasible() {
        match lp(None, &[], Strictness::TwoPhase).unwrap() {
            LpOutcome::Feasible(p) => assert_eq!(p.len(), 0),
            other => panic!("expected feasible, got {:?}", other),
        }
    }
}

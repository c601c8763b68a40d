//! Floating-point truncated Fock-space oracle.
//!
//! Everything symbolic in this crate can be checked numerically by plugging
//! truncated harmonic-oscillator matrices into the canonical generators.
//! Truncation pollutes a band near the matrix corner, so comparisons are
//! restricted to a projected top-left block; polynomial identities of total
//! degree d are exact there whenever the margin exceeds d, while identities
//! involving the displacement exponential leak deeper and need a generous
//! margin (see `displacement_check`).

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::oppoly::{Algebra, OpPoly};
use crate::ordering::s_ordered;
use crate::scalar::Scalar;

/// Dense complex matrix, row-major. Just enough linear algebra for the
/// oracle: products, linear combinations, a Pade exponential, and projected
/// norms.
#[derive(Clone)]
pub struct CMat {
    dim: usize,
    data: Vec<Complex64>,
}

impl CMat {
    pub fn zeros(dim: usize) -> CMat {
        CMat { dim, data: vec![Complex64::new(0.0, 0.0); dim * dim] }
    }

    pub fn identity(dim: usize) -> CMat {
        let mut m = CMat::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mul(&self, rhs: &CMat) -> CMat {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut out = CMat::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * rhs.data[k * n + j];
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &CMat) -> CMat {
        assert_eq!(self.dim, rhs.dim);
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(&rhs.data) {
            *x += *y;
        }
        out
    }

    pub fn sub(&self, rhs: &CMat) -> CMat {
        assert_eq!(self.dim, rhs.dim);
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(&rhs.data) {
            *x -= *y;
        }
        out
    }

    pub fn scale(&self, c: Complex64) -> CMat {
        let mut out = self.clone();
        for x in out.data.iter_mut() {
            *x *= c;
        }
        out
    }

    pub fn commutator(&self, rhs: &CMat) -> CMat {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    /// Max absolute entry over the top-left `rank` x `rank` block.
    pub fn projected_max_abs(&self, rank: usize) -> f64 {
        let rank = rank.min(self.dim);
        let mut mx = 0.0f64;
        for i in 0..rank {
            for j in 0..rank {
                mx = mx.max(self.data[i * self.dim + j].norm());
            }
        }
        mx
    }

    fn norm_inf(&self) -> f64 {
        let n = self.dim;
        (0..n)
            .map(|i| (0..n).map(|j| self.data[i * n + j].norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// Solve self * X = B by Gaussian elimination with partial pivoting.
    fn solve(&self, b: &CMat) -> CMat {
        assert_eq!(self.dim, b.dim);
        let n = self.dim;
        let mut a = self.data.clone();
        let mut x = b.data.clone();
        for col in 0..n {
            let pivot_row = (col..n)
                .max_by(|&r1, &r2| {
                    a[r1 * n + col]
                        .norm()
                        .partial_cmp(&a[r2 * n + col].norm())
                        .unwrap()
                })
                .unwrap();
            if pivot_row != col {
                for j in 0..n {
                    a.swap(col * n + j, pivot_row * n + j);
                    x.swap(col * n + j, pivot_row * n + j);
                }
            }
            let pivot = a[col * n + col];
            for row in (col + 1)..n {
                let factor = a[row * n + col] / pivot;
                if factor.norm_sqr() == 0.0 {
                    continue;
                }
                for j in col..n {
                    let v = a[col * n + j];
                    a[row * n + j] -= factor * v;
                }
                for j in 0..n {
                    let v = x[col * n + j];
                    x[row * n + j] -= factor * v;
                }
            }
        }
        for col in (0..n).rev() {
            let pivot = a[col * n + col];
            for j in 0..n {
                x[col * n + j] /= pivot;
            }
            for row in 0..col {
                let factor = a[row * n + col];
                if factor.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..n {
                    let v = x[col * n + j];
                    x[row * n + j] -= factor * v;
                }
            }
        }
        CMat { dim: n, data: x }
    }

    /// Matrix exponential by scaling-and-squaring with a [6/6] Pade
    /// approximant.
    pub fn expm(&self) -> CMat {
        const PADE: [f64; 7] = [
            1.0,
            0.5,
            5.0 / 44.0,
            1.0 / 66.0,
            1.0 / 792.0,
            1.0 / 15_840.0,
            1.0 / 665_280.0,
        ];
        let norm = self.norm_inf();
        let squarings = if norm > 0.5 {
            (norm / 0.5).log2().ceil() as u32
        } else {
            0
        };
        let scaled = self.scale(Complex64::new(1.0 / (1u64 << squarings) as f64, 0.0));

        let mut num = CMat::identity(self.dim);
        let mut den = CMat::identity(self.dim);
        let mut power = CMat::identity(self.dim);
        for (j, &c) in PADE.iter().enumerate().skip(1) {
            power = power.mul(&scaled);
            let term = power.scale(Complex64::new(c, 0.0));
            num = num.add(&term);
            den = if j % 2 == 0 {
                den.add(&term)
            } else {
                den.sub(&term)
            };
        }
        let mut result = den.solve(&num);
        for _ in 0..squarings {
            result = result.mul(&result);
        }
        result
    }
}

impl std::ops::Index<(usize, usize)> for CMat {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.dim + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.dim + j]
    }
}

/// Default tolerance for identities that are exact up to roundoff.
pub const TOL_ALGEBRAIC: f64 = 1e-10;
/// Default tolerance for second-order finite-difference identities at
/// step 1e-4.
pub const TOL_DERIVATIVE: f64 = 1e-6;

#[derive(Clone, Debug)]
pub struct FockConfig {
    /// Truncation dimension (number of retained number states).
    pub dim: usize,
    pub hbar: f64,
    /// Comparison rank: deviations are measured on the top-left block.
    pub proj_rank: usize,
    /// Override for the per-check default tolerance.
    pub tol: Option<f64>,
}

impl FockConfig {
    pub fn new(dim: usize) -> FockConfig {
        FockConfig {
            dim,
            hbar: 1.0,
            proj_rank: if dim > 8 { dim - 8 } else { dim.saturating_sub(1).max(1) },
            tol: None,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.dim < 4 {
            return Err(Error::Domain(format!(
                "truncation dimension {} too small (need at least 4)",
                self.dim
            )));
        }
        if self.proj_rank >= self.dim {
            return Err(Error::Domain(format!(
                "projection rank {} must be below the dimension {}",
                self.proj_rank, self.dim
            )));
        }
        if self.hbar <= 0.0 {
            return Err(Error::Domain("hbar must be positive".into()));
        }
        Ok(())
    }
}

/// Truncated matrices of the canonical generators.
pub struct Generators {
    pub a: CMat,
    pub adag: CMat,
    pub q: CMat,
    pub p: CMat,
    pub hbar: f64,
}

/// Build lowering/raising matrices and the canonical pair
/// q = sqrt(hbar/2)(a + a^T), p = -i sqrt(hbar/2)(a - a^T).
pub fn build_generators(cfg: &FockConfig) -> Result<Generators> {
    cfg.validate()?;
    let n = cfg.dim;
    let mut a = CMat::zeros(n);
    for j in 1..n {
        a[(j - 1, j)] = Complex64::new((j as f64).sqrt(), 0.0);
    }
    let mut adag = CMat::zeros(n);
    for j in 1..n {
        adag[(j, j - 1)] = Complex64::new((j as f64).sqrt(), 0.0);
    }
    let c = (cfg.hbar / 2.0).sqrt();
    let q = a.add(&adag).scale(Complex64::new(c, 0.0));
    let p = a.sub(&adag).scale(Complex64::new(0.0, -c));
    Ok(Generators { a, adag, q, p, hbar: cfg.hbar })
}

/// Substitute generator matrices into a concrete operator polynomial.
/// All scalars must have hbar, s, r substituted away already.
pub fn matrix_of(op: &OpPoly, gens: &Generators) -> Result<CMat> {
    let (x, y) = match op.algebra() {
        Algebra::Qp => (&gens.q, &gens.p),
        Algebra::AAdag => (&gens.adag, &gens.a),
    };
    let dim = x.dim();
    let (deg_x, deg_y) = op.degree();
    let mut x_pows = vec![CMat::identity(dim)];
    for _ in 0..deg_x {
        x_pows.push(x_pows.last().unwrap().mul(x));
    }
    let mut y_pows = vec![CMat::identity(dim)];
    for _ in 0..deg_y {
        y_pows.push(y_pows.last().unwrap().mul(y));
    }
    let mut acc = CMat::zeros(dim);
    for ((n, m), c) in op.terms() {
        let z = c.to_complex_f64()?;
        acc = acc.add(&x_pows[*n as usize].mul(&y_pows[*m as usize]).scale(z));
    }
    Ok(acc)
}

/// Outcome of one numerical check.
#[derive(Clone, Debug)]
pub struct FockReport {
    pub deviation: f64,
    pub tol: f64,
    pub pass: bool,
    pub detail: String,
}

fn report(deviation: f64, tol: f64, detail: String) -> FockReport {
    FockReport { deviation, tol, pass: deviation < tol, detail }
}

fn relative_dev(diff: &CMat, reference: &CMat, rank: usize) -> f64 {
    diff.projected_max_abs(rank) / reference.projected_max_abs(rank).max(1.0)
}

/// Projected commutation relations of the generator matrices:
/// [a, a^dag] = 1 and [q, p] = i hbar.
pub fn generator_commutator_check(cfg: &FockConfig) -> Result<FockReport> {
    let gens = build_generators(cfg)?;
    let rank = cfg.proj_rank;
    let dim = cfg.dim;
    let eye = CMat::identity(dim);
    let dev_a = gens
        .a
        .commutator(&gens.adag)
        .sub(&eye)
        .projected_max_abs(rank);
    let dev_qp = gens
        .q
        .commutator(&gens.p)
        .sub(&eye.scale(Complex64::new(0.0, cfg.hbar)))
        .projected_max_abs(rank)
        / cfg.hbar;
    let dev = dev_a.max(dev_qp);
    let tol = cfg.tol.unwrap_or(1e-12);
    Ok(report(
        dev,
        tol,
        format!("boson commutator dev {dev_a:.3e}, canonical commutator dev {dev_qp:.3e}"),
    ))
}

/// D(xi, eta) = exp(i (xi q + eta p)) as a truncated matrix.
fn displacement(gens: &Generators, xi: f64, eta: f64) -> CMat {
    let g = gens
        .q
        .scale(Complex64::new(0.0, xi))
        .add(&gens.p.scale(Complex64::new(0.0, eta)));
    g.expm()
}

/// s-parametrized displacement: the extra central phase
/// exp(-i hbar s xi eta / 2).
fn displacement_s(gens: &Generators, s: Complex64, xi: f64, eta: f64) -> CMat {
    let phase = (Complex64::new(0.0, -gens.hbar * 0.5) * s * Complex64::new(xi * eta, 0.0)).exp();
    displacement(gens, xi, eta).scale(phase)
}

/// Conjugation by the displacement against the symbolically shifted operator:
/// D f D^-1 versus f(q + hbar eta, p - hbar xi). The shift is done exactly
/// on the operator polynomial; the comparison runs on the projected block.
pub fn displacement_check(xi: f64, eta: f64, f: &OpPoly, cfg: &FockConfig) -> Result<FockReport> {
    if f.algebra() != Algebra::Qp {
        return Err(Error::Domain(
            "displacement_check expects an operator over the canonical pair".into(),
        ));
    }
    let gens = build_generators(cfg)?;
    let u = displacement(&gens, xi, eta);
    let u_inv = displacement(&gens, -xi, -eta);
    let m = matrix_of(f, &gens)?;
    let lhs = u.mul(&m).mul(&u_inv);

    let shift_x = Scalar::from_rat(exact_f64(cfg.hbar * eta));
    let shift_y = Scalar::from_rat(exact_f64(-cfg.hbar * xi));
    let shifted = f.shift_generators(&shift_x, &shift_y);
    let rhs = matrix_of(&shifted, &gens)?;

    let dev = relative_dev(&lhs.sub(&rhs), &rhs, cfg.proj_rank);
    let tol = cfg.tol.unwrap_or(1e-8);
    Ok(report(
        dev,
        tol,
        format!(
            "displacement conjugation at (xi, eta) = ({xi}, {eta}), rank {}",
            cfg.proj_rank
        ),
    ))
}

/// Every f64 is an exact dyadic rational.
fn exact_f64(x: f64) -> crate::scalar::Rat {
    crate::scalar::Rat::from_float(x).expect("finite float")
}

fn exact_c64(z: Complex64) -> crate::scalar::Coeff {
    crate::scalar::Coeff::new(exact_f64(z.re), exact_f64(z.im))
}

/// Central finite-difference stencils of second order accuracy, offsets and
/// weights, by derivative order.
fn stencil(order: u32) -> Vec<(i32, f64)> {
    match order {
        0 => vec![(0, 1.0)],
        1 => vec![(-1, -0.5), (1, 0.5)],
        2 => vec![(-1, 1.0), (0, -2.0), (1, 1.0)],
        3 => vec![(-2, -0.5), (-1, 1.0), (1, -1.0), (2, 0.5)],
        4 => vec![(-2, 1.0), (-1, -4.0), (0, 6.0), (1, -4.0), (2, 1.0)],
        _ => panic!("finite-difference stencils provided up to order 4"),
    }
}

/// Evaluate a differential operator on a matrix-valued field at one point:
/// multiplication parts use the point values, derivative parts use central
/// finite differences with step h.
fn eval_diffop_at(
    op: &crate::diffop::DiffOp,
    point: (f64, f64),
    h: f64,
    field: &mut dyn FnMut(f64, f64) -> CMat,
    dim: usize,
) -> Result<CMat> {
    let mut acc = CMat::zeros(dim);
    for ((a, b, c, d), coeff) in op.terms() {
        let z = coeff.to_complex_f64()?;
        let weight = point.0.powi(*a as i32) * point.1.powi(*b as i32);
        let mut partial = CMat::zeros(dim);
        for (off1, w1) in stencil(*c) {
            for (off2, w2) in stencil(*d) {
                let value = field(point.0 + off1 as f64 * h, point.1 + off2 as f64 * h);
                partial = partial.add(&value.scale(Complex64::new(w1 * w2, 0.0)));
            }
        }
        let denom = h.powi(*c as i32) * h.powi(*d as i32);
        acc = acc.add(&partial.scale(z * Complex64::new(weight / denom, 0.0)));
    }
    Ok(acc)
}

/// Finite-difference check report: errors at step h and h/2, their ratio
/// (about 1/4 for a second-order stencil in the truncation-dominated
/// regime), and the pass verdict at step h.
#[derive(Clone, Debug)]
pub struct FdReport {
    pub err_h: f64,
    pub err_half_h: f64,
    pub ratio: f64,
    pub tol: f64,
    pub pass: bool,
    pub detail: String,
}

/// Both derivative identities at one point:
///
/// * the xi-derivative of the s-displacement equals
///   (i/2)[(1+s) q D + (1-s) D q];
/// * the (n, m) generator at ordering r applied to the s-displacement
///   equals the commutator with the r-ordered product.
#[derive(Clone, Debug)]
pub struct DerivativeReport {
    pub basis_derivative: FdReport,
    pub generator_action: FdReport,
}

pub fn derivative_check(
    s_val: Complex64,
    point: (f64, f64),
    h: f64,
    n: u32,
    m: u32,
    r_val: f64,
    cfg: &FockConfig,
) -> Result<DerivativeReport> {
    let gens = build_generators(cfg)?;
    let tol = cfg.tol.unwrap_or(TOL_DERIVATIVE);
    let rank = cfg.proj_rank;
    let dim = cfg.dim;

    // (i) basis derivative identity
    let rhs = {
        let d = displacement_s(&gens, s_val, point.0, point.1);
        let one_plus = Complex64::new(1.0, 0.0) + s_val;
        let one_minus = Complex64::new(1.0, 0.0) - s_val;
        gens.q
            .mul(&d)
            .scale(one_plus)
            .add(&d.mul(&gens.q).scale(one_minus))
            .scale(Complex64::new(0.0, 0.5))
    };
    let fd_err = |step: f64| -> f64 {
        let plus = displacement_s(&gens, s_val, point.0 + step, point.1);
        let minus = displacement_s(&gens, s_val, point.0 - step, point.1);
        let lhs = plus.sub(&minus).scale(Complex64::new(0.5 / step, 0.0));
        relative_dev(&lhs.sub(&rhs), &rhs, rank)
    };
    let (e1, e1_half) = (fd_err(h), fd_err(h / 2.0));
    let basis_derivative = FdReport {
        err_h: e1,
        err_half_h: e1_half,
        ratio: e1_half / e1.max(f64::MIN_POSITIVE),
        tol,
        pass: e1 < tol,
        detail: format!("basis xi-derivative at point {:?}, s = {}", point, s_val),
    };

    // (ii) generator action against the operator commutator
    let r_scalar = Scalar::from_rat(exact_f64(r_val));
    let t_op = s_ordered(n, m, &r_scalar, Algebra::Qp)?
        .subst_hbar(&exact_c64(Complex64::new(cfg.hbar, 0.0)));
    let t_mat = matrix_of(&t_op, &gens)?;
    let generator = crate::correspondence::t_generator(
        n,
        m,
        &r_scalar,
        &Scalar::from_coeff(exact_c64(s_val)),
    )?
    .subst_hbar(&exact_c64(Complex64::new(cfg.hbar, 0.0)));
    let rhs2 = {
        let d = displacement_s(&gens, s_val, point.0, point.1);
        t_mat.mul(&d).sub(&d.mul(&t_mat))
    };
    let rhs2_scale = rhs2.projected_max_abs(rank).max(1.0);
    let fd_err2 = |step: f64| -> Result<f64> {
        let mut field = |x: f64, y: f64| displacement_s(&gens, s_val, x, y);
        let lhs = eval_diffop_at(&generator, point, step, &mut field, dim)?;
        Ok(lhs.sub(&rhs2).projected_max_abs(rank) / rhs2_scale)
    };
    let (e2, e2_half) = (fd_err2(h)?, fd_err2(h / 2.0)?);
    let generator_action = FdReport {
        err_h: e2,
        err_half_h: e2_half,
        ratio: e2_half / e2.max(f64::MIN_POSITIVE),
        tol,
        pass: e2 < tol,
        detail: format!("generator ({n},{m}) action at r = {r_val}, s = {s_val}"),
    };

    Ok(DerivativeReport { basis_derivative, generator_action })
}

/// Numeric agreement of the two binomial routes to the s-ordered product:
/// both are evaluated as raw matrix sums (no symbolic reordering) and
/// compared against the matrix of the symbolic result.
pub fn route_agreement_check(n: u32, m: u32, s_val: f64, cfg: &FockConfig) -> Result<FockReport> {
    let gens = build_generators(cfg)?;
    let rank = cfg.proj_rank;
    let dim = cfg.dim;

    let binom = |n: u32, k: u32| -> f64 {
        let mut acc = 1.0;
        for j in 0..k {
            acc = acc * (n - j) as f64 / (j + 1) as f64;
        }
        acc
    };
    let mat_pow = |mat: &CMat, k: u32| -> CMat {
        let mut acc = CMat::identity(dim);
        for _ in 0..k {
            acc = acc.mul(mat);
        }
        acc
    };

    // route over X-splittings
    let mut route1 = CMat::zeros(dim);
    let y_m = mat_pow(&gens.p, m);
    for j in 0..=n {
        let w = binom(n, j) * (1.0 + s_val).powi(j as i32) * (1.0 - s_val).powi((n - j) as i32);
        route1 = route1.add(
            &mat_pow(&gens.q, j)
                .mul(&y_m)
                .mul(&mat_pow(&gens.q, n - j))
                .scale(Complex64::new(w, 0.0)),
        );
    }
    route1 = route1.scale(Complex64::new(0.5_f64.powi(n as i32), 0.0));

    // route over Y-splittings
    let mut route2 = CMat::zeros(dim);
    let x_n = mat_pow(&gens.q, n);
    for k in 0..=m {
        let w = binom(m, k) * (1.0 - s_val).powi(k as i32) * (1.0 + s_val).powi((m - k) as i32);
        route2 = route2.add(
            &mat_pow(&gens.p, k)
                .mul(&x_n)
                .mul(&mat_pow(&gens.p, m - k))
                .scale(Complex64::new(w, 0.0)),
        );
    }
    route2 = route2.scale(Complex64::new(0.5_f64.powi(m as i32), 0.0));

    // symbolic result, substituted
    let symbolic = s_ordered(n, m, &Scalar::from_rat(exact_f64(s_val)), Algebra::Qp)?
        .subst_hbar(&exact_c64(Complex64::new(cfg.hbar, 0.0)));
    let reference = matrix_of(&symbolic, &gens)?;

    let dev = relative_dev(&route1.sub(&route2), &reference, rank)
        .max(relative_dev(&route1.sub(&reference), &reference, rank));
    let tol = cfg.tol.unwrap_or(TOL_ALGEBRAIC);
    Ok(report(
        dev,
        tol,
        format!("ordered-product routes at ({n},{m}), s = {s_val}"),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn cfg32() -> FockConfig {
        FockConfig::new(32)
    }

    #[test]
    fn expm_of_zero_and_diagonal() {
        let z = CMat::zeros(4);
        let e = z.expm();
        assert!(e.sub(&CMat::identity(4)).projected_max_abs(4) < 1e-14);

        let mut d = CMat::zeros(3);
        d[(0, 0)] = Complex64::new(1.0, 0.0);
        d[(1, 1)] = Complex64::new(0.0, 2.0);
        d[(2, 2)] = Complex64::new(-0.5, 0.3);
        let e = d.expm();
        for i in 0..3 {
            let want = d[(i, i)].exp();
            assert!((e[(i, i)] - want).norm() < 1e-13);
        }
    }

    #[test]
    fn generator_commutators_are_canonical() {
        let rep = generator_commutator_check(&cfg32()).unwrap();
        assert!(rep.pass, "{}", rep.detail);
        assert!(rep.deviation < 1e-13);
    }

    #[test]
    fn single_excitation_matrix_element() {
        let gens = build_generators(&cfg32()).unwrap();
        // off-diagonal entries of q at hbar = 1 are sqrt(n/2)
        assert!((gens.q[(0, 1)].re - (0.5f64).sqrt()).abs() < 1e-15);
        assert!((gens.q[(1, 0)].re - (0.5f64).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn matrix_of_identity_and_commutator() {
        let gens = build_generators(&cfg32()).unwrap();
        let eye = matrix_of(&OpPoly::one(Algebra::Qp), &gens).unwrap();
        assert!(eye.sub(&CMat::identity(32)).projected_max_abs(32) < 1e-15);

        // q p - p q on the matrices matches i hbar on the projected block
        let qp = OpPoly::x(Algebra::Qp).mul(&OpPoly::y(Algebra::Qp)).unwrap();
        let pq = OpPoly::y(Algebra::Qp).mul(&OpPoly::x(Algebra::Qp)).unwrap();
        let op = (&qp - &pq).subst_hbar(&crate::scalar::coeff_int(1));
        let m = matrix_of(&op, &gens).unwrap();
        let want = CMat::identity(32).scale(Complex64::new(0.0, 1.0));
        assert!(m.sub(&want).projected_max_abs(24) < 1e-13);
    }

    #[test]
    fn matrix_of_rejects_symbolic() {
        let gens = build_generators(&cfg32()).unwrap();
        let op = OpPoly::one(Algebra::Qp).scale(&Scalar::hbar());
        assert!(matches!(
            matrix_of(&op, &gens),
            Err(Error::SymbolicScalar { .. })
        ));
    }

    #[test]
    fn symbolic_rewrite_cross_validated() {
        // matrix of s_ordered(2,1,0) equals matrix of q^2 p - i hbar q
        let gens = build_generators(&cfg32()).unwrap();
        let sym = s_ordered(2, 1, &Scalar::zero(), Algebra::Qp)
            .unwrap()
            .subst_hbar(&crate::scalar::coeff_int(1));
        let got = matrix_of(&sym, &gens).unwrap();
        let direct = {
            let q2p = OpPoly::monomial(Algebra::Qp, 2, 1, Scalar::one()).unwrap();
            let iq = OpPoly::monomial(Algebra::Qp, 1, 0, Scalar::i()).unwrap();
            matrix_of(&(&q2p - &iq), &gens).unwrap()
        };
        assert!(got.sub(&direct).projected_max_abs(24) < 1e-12);
    }

    #[test]
    fn displacement_identity_small_amplitude() {
        let mut cfg = FockConfig::new(64);
        cfg.proj_rank = 40;
        let qp = OpPoly::x(Algebra::Qp).mul(&OpPoly::y(Algebra::Qp)).unwrap()
            .subst_hbar(&crate::scalar::coeff_int(1));
        let rep = displacement_check(0.3, 0.2, &qp, &cfg).unwrap();
        assert!(rep.pass, "dev {}", rep.deviation);
    }

    #[test]
    fn route_matrices_agree() {
        let rep = route_agreement_check(3, 2, 0.5, &cfg32()).unwrap();
        assert!(rep.pass, "dev {}", rep.deviation);
    }

    #[test]
    fn derivative_identities_small_case() {
        let cfg = FockConfig::new(48);
        let rep = derivative_check(
            Complex64::new(0.0, 0.0),
            (0.2, 0.1),
            1e-4,
            1,
            0,
            0.0,
            &cfg,
        )
        .unwrap();
        assert!(rep.basis_derivative.pass, "{:?}", rep.basis_derivative);
        assert!(rep.generator_action.pass, "{:?}", rep.generator_action);
    }

    #[test]
    fn config_validation() {
        assert!(build_generators(&FockConfig::new(2)).is_err());
        let mut cfg = cfg32();
        cfg.proj_rank = 32;
        assert!(build_generators(&cfg).is_err());
        let _ = rat(1, 1);
    }
}

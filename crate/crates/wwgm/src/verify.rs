//! One-shot verification suite: every cross-module invariant, each as an
//! independent check returning a pass/fail report with the first
//! counterexample. Randomized checks use a fixed-seed generator so runs are
//! reproducible.

use num_bigint::BigInt;
use num_complex::Complex64;

use crate::correspondence::{
    bopp_pair, bopp_symbol, bopp_symbol_right, gamma_generator, quantize, symbol, BoppBasis, Side,
};
use crate::diffop::DiffOp;
use crate::error::Result;
use crate::fock::{
    derivative_check, displacement_check, generator_commutator_check, route_agreement_check,
    FockConfig,
};
use crate::oppoly::{Algebra, OpPoly};
use crate::ordering::{convert_order, s_ordered, s_ordered_alt, symmetrize_oracle};
use crate::phasepoly::{PhasePoly, VarPair};
use crate::scalar::{coeff_int, Coeff, Powers, Rat, Scalar};
use crate::star::{moyal, moyal_series, poisson, star, PoissonConvention};
use crate::winfinity::{central_extension_report, structure_expand};

/// Result of one named check.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn pass(name: &'static str, detail: impl Into<String>) -> Check {
        Check { name, pass: true, detail: detail.into() }
    }

    fn fail(name: &'static str, detail: impl Into<String>) -> Check {
        Check { name, pass: false, detail: detail.into() }
    }
}

fn err_str(e: crate::Error) -> String {
    format!("operation failed: {e}")
}

// splitmix64: deterministic, seedable, dependency-free
struct Rng(u64);

impl Rng {
    fn new(seed: u64) -> Rng {
        Rng(seed)
    }

    fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    fn small_rat(&mut self) -> Rat {
        let num = self.below(9) as i64 - 4;
        let den = 1 + self.below(3) as i64;
        Rat::new(BigInt::from(num), BigInt::from(den))
    }

    fn coeff(&mut self) -> Coeff {
        Coeff::new(self.small_rat(), self.small_rat())
    }

    fn scalar(&mut self) -> Scalar {
        let mut s = Scalar::zero();
        for _ in 0..=self.below(2) {
            let p = Powers {
                hbar: self.below(2) as u32,
                s: self.below(2) as u32,
                r: 0,
            };
            s = &s + &Scalar::term(p, self.coeff());
        }
        s
    }

    fn oppoly(&mut self, algebra: Algebra, max_deg: u32) -> OpPoly {
        let mut p = OpPoly::zero(algebra);
        for _ in 0..=self.below(3) {
            let n = self.below((max_deg + 1) as u64) as u32;
            let m = self.below((max_deg + 1) as u64) as u32;
            p = &p + &OpPoly::monomial(algebra, n, m, self.scalar()).unwrap();
        }
        p
    }

    fn oppoly_concrete(&mut self, algebra: Algebra, max_deg: u32) -> OpPoly {
        let mut p = OpPoly::zero(algebra);
        for _ in 0..=self.below(3) {
            let n = self.below((max_deg + 1) as u64) as u32;
            let m = self.below((max_deg + 1) as u64) as u32;
            let c = &Scalar::from_coeff(self.coeff()) * &Scalar::hbar().pow(self.below(2) as u32);
            p = &p + &OpPoly::monomial(algebra, n, m, c).unwrap();
        }
        p
    }

    fn phasepoly(&mut self, vars: VarPair, max_deg: u32) -> PhasePoly {
        let mut p = PhasePoly::zero(vars);
        for _ in 0..=self.below(3) {
            let a = self.below((max_deg + 1) as u64) as u32;
            let b = self.below((max_deg + 1) as u64) as u32;
            if a + b > max_deg {
                continue;
            }
            p = &p + &PhasePoly::monomial(vars, a, b, Scalar::from_coeff(self.coeff())).unwrap();
        }
        p
    }

    fn diffop(&mut self, vars: VarPair, max_deg: u32) -> DiffOp {
        let mut d = DiffOp::zero(vars);
        for _ in 0..=self.below(3) {
            let key = (
                self.below((max_deg + 1) as u64) as u32,
                self.below((max_deg + 1) as u64) as u32,
                self.below((max_deg + 1) as u64) as u32,
                self.below((max_deg + 1) as u64) as u32,
            );
            d = &d + &DiffOp::monomial(vars, key, self.scalar()).unwrap();
        }
        d
    }
}

// ---------------------------------------------------------------------------
// core carriers

pub fn scalar_ring_axioms(cases: u32) -> Check {
    let name = "core.scalar_ring_axioms";
    let mut rng = Rng::new(11);
    for i in 0..cases {
        let (a, b, c) = (rng.scalar(), rng.scalar(), rng.scalar());
        let assoc_add = &(&a + &b) + &c == &a + &(&b + &c);
        let assoc_mul = &(&a * &b) * &c == &a * &(&b * &c);
        let comm_mul = &a * &b == &b * &a;
        let distrib = &a * &(&b + &c) == &(&a * &b) + &(&a * &c);
        let units = (&a + &Scalar::zero() == a) && (&a * &Scalar::one() == a);
        let inverse = (&a + &(-&a)).is_zero();
        if !(assoc_add && assoc_mul && comm_mul && distrib && units && inverse) {
            return Check::fail(name, format!("failed on case {i}: a = {a}, b = {b}, c = {c}"));
        }
    }
    Check::pass(name, format!("{cases} randomized ring-axiom cases"))
}

pub fn oppoly_associativity(cases: u32, max_deg: u32) -> Check {
    let name = "core.oppoly_associativity";
    let mut rng = Rng::new(23);
    for i in 0..cases {
        for algebra in [Algebra::Qp, Algebra::AAdag] {
            let (a, b, c) = (
                rng.oppoly(algebra, max_deg),
                rng.oppoly(algebra, max_deg),
                rng.oppoly(algebra, max_deg),
            );
            let left = match a.mul(&b).and_then(|ab| ab.mul(&c)) {
                Ok(v) => v,
                Err(e) => return Check::fail(name, err_str(e)),
            };
            let right = match b.mul(&c).and_then(|bc| a.mul(&bc)) {
                Ok(v) => v,
                Err(e) => return Check::fail(name, err_str(e)),
            };
            if left != right {
                return Check::fail(
                    name,
                    format!("case {i} over {:?}: ({a})({b})({c}) reorders differently", algebra),
                );
            }
            // distributivity spot-check on the same triple
            let d1 = a.mul(&(&b + &c)).unwrap();
            let d2 = &a.mul(&b).unwrap() + &a.mul(&c).unwrap();
            if d1 != d2 {
                return Check::fail(name, format!("distributivity failed on case {i}"));
            }
        }
    }
    Check::pass(name, format!("{cases} random degree-{max_deg} triples, both algebras"))
}

pub fn adjoint_involution(cases: u32) -> Check {
    let name = "core.adjoint_involution";
    let mut rng = Rng::new(37);
    for i in 0..cases {
        for algebra in [Algebra::Qp, Algebra::AAdag] {
            let a = rng.oppoly_concrete(algebra, 4);
            let round = a.adjoint().and_then(|x| x.adjoint());
            match round {
                Ok(x) if x == a => {}
                Ok(x) => {
                    return Check::fail(
                        name,
                        format!("case {i} over {:?}: adjoint(adjoint({a})) = {x}", algebra),
                    )
                }
                Err(e) => return Check::fail(name, err_str(e)),
            }
        }
    }
    Check::pass(name, format!("{cases} random concrete-parameter operators, both algebras"))
}

pub fn diffop_composition(cases: u32) -> Check {
    let name = "core.diffop_composition";
    let mut rng = Rng::new(41);
    for i in 0..cases {
        let d1 = rng.diffop(VarPair::Qp, 3);
        let d2 = rng.diffop(VarPair::Qp, 3);
        let f = rng.phasepoly(VarPair::Qp, 4);
        let composed = d1
            .compose(&d2)
            .and_then(|d| d.apply(&f))
            .unwrap_or_else(|_| PhasePoly::zero(VarPair::Qp));
        let sequential = d2
            .apply(&f)
            .and_then(|g| d1.apply(&g))
            .unwrap_or_else(|_| PhasePoly::zero(VarPair::Qp));
        if composed != sequential {
            return Check::fail(name, format!("case {i}: d1 = {d1}; d2 = {d2}; f = {f}"));
        }
        // composition associativity
        let d3 = rng.diffop(VarPair::Qp, 2);
        let left = d1.compose(&d2).unwrap().compose(&d3).unwrap();
        let right = d1.compose(&d2.compose(&d3).unwrap()).unwrap();
        if left != right {
            return Check::fail(name, format!("composition not associative on case {i}"));
        }
    }
    Check::pass(name, format!("{cases} random operator/symbol cases"))
}

// ---------------------------------------------------------------------------
// ordering

pub fn ordering_routes(max_n: u32, max_m: u32) -> Check {
    let name = "ordering.route_agreement";
    let s = Scalar::sym_s();
    for algebra in [Algebra::Qp, Algebra::AAdag] {
        for n in 0..=max_n {
            for m in 0..=max_m {
                let a = match s_ordered(n, m, &s, algebra) {
                    Ok(v) => v,
                    Err(e) => return Check::fail(name, err_str(e)),
                };
                let b = match s_ordered_alt(n, m, &s, algebra) {
                    Ok(v) => v,
                    Err(e) => return Check::fail(name, err_str(e)),
                };
                if a != b {
                    return Check::fail(
                        name,
                        format!("splitting routes disagree at ({n},{m}) over {:?}", algebra),
                    );
                }
                if n + m <= 12 {
                    let sym = match symmetrize_oracle(n, m, algebra) {
                        Ok(v) => v,
                        Err(e) => return Check::fail(name, err_str(e)),
                    };
                    let weyl = s_ordered(n, m, &Scalar::zero(), algebra).unwrap();
                    if sym != weyl {
                        return Check::fail(
                            name,
                            format!(
                                "symmetrization oracle disagrees at ({n},{m}) over {:?}",
                                algebra
                            ),
                        );
                    }
                }
            }
        }
    }
    Check::pass(
        name,
        format!("both splitting routes and the symmetrization oracle agree up to ({max_n},{max_m})"),
    )
}

pub fn conversion_round_trip(max_n: u32, max_m: u32) -> Check {
    let name = "ordering.conversion_round_trip";
    let s = Scalar::sym_s();
    let r = Scalar::sym_r();
    for algebra in [Algebra::Qp, Algebra::AAdag] {
        for n in 0..=max_n {
            for m in 0..=max_m {
                // compose s -> r -> s at the coefficient level
                let fwd = convert_order(n, m, &s, &r, algebra);
                let mut collected: std::collections::BTreeMap<u32, Scalar> = Default::default();
                for (k1, c1) in &fwd.terms {
                    let back = convert_order(n - k1, m - k1, &r, &s, algebra);
                    for (k2, c2) in &back.terms {
                        let entry = collected.entry(k1 + k2).or_default();
                        *entry = &*entry + &(c1 * c2);
                    }
                }
                let identity = collected.iter().all(|(k, c)| {
                    if *k == 0 {
                        c.is_one()
                    } else {
                        c.is_zero()
                    }
                });
                if !identity {
                    return Check::fail(
                        name,
                        format!("round trip not identity at ({n},{m}) over {:?}", algebra),
                    );
                }
                // realizing the expansion reproduces the source product
                let realized = match fwd.realize(algebra) {
                    Ok(v) => v,
                    Err(e) => return Check::fail(name, err_str(e)),
                };
                if realized != s_ordered(n, m, &s, algebra).unwrap() {
                    return Check::fail(
                        name,
                        format!("realized expansion differs at ({n},{m}) over {:?}", algebra),
                    );
                }
            }
        }
    }
    Check::pass(
        name,
        format!("two independent symbolic parameters, indices up to ({max_n},{max_m})"),
    )
}

pub fn hermiticity(max: u32) -> Check {
    let name = "ordering.hermiticity";
    let concrete: [(i64, i64); 6] = [(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1), (1, 2)];
    for (num, kind) in concrete {
        // kind 0: real value `num`; kind 1: imaginary; kind 2: num/kind rational
        let s_val = match kind {
            0 => Coeff::new(Rat::new(num.into(), 1.into()), Rat::new(0.into(), 1.into())),
            1 => Coeff::new(Rat::new(0.into(), 1.into()), Rat::new(num.into(), 1.into())),
            _ => Coeff::new(Rat::new(num.into(), kind.into()), Rat::new(0.into(), 1.into())),
        };
        for n in 0..=max {
            for m in 0..=max {
                let t = s_ordered(n, m, &Scalar::from_coeff(s_val.clone()), Algebra::Qp).unwrap();
                let want =
                    s_ordered(n, m, &Scalar::from_coeff(-s_val.conj()), Algebra::Qp).unwrap();
                match t.adjoint() {
                    Ok(adj) if adj == want => {}
                    Ok(_) => {
                        return Check::fail(
                            name,
                            format!("canonical-pair adjoint law fails at ({n},{m}), s = {s_val}"),
                        )
                    }
                    Err(e) => return Check::fail(name, err_str(e)),
                }
            }
        }
    }
    // boson pair, real parameters only
    for (num, den) in [(0i64, 1i64), (1, 1), (-1, 1), (1, 2)] {
        let s_val = Coeff::new(Rat::new(num.into(), den.into()), Rat::new(0.into(), 1.into()));
        for n in 0..=max {
            for m in 0..=max {
                let y = s_ordered(n, m, &Scalar::from_coeff(s_val.clone()), Algebra::AAdag)
                    .unwrap();
                let want =
                    s_ordered(m, n, &Scalar::from_coeff(s_val.conj()), Algebra::AAdag).unwrap();
                if y.adjoint().unwrap() != want {
                    return Check::fail(
                        name,
                        format!("boson-pair adjoint law fails at ({n},{m}), s = {s_val}"),
                    );
                }
            }
        }
    }
    // real-parameter convention with the symbolic parameter
    let s = Scalar::sym_s();
    for n in 0..=max {
        for m in 0..=max {
            let t = s_ordered(n, m, &s, Algebra::Qp).unwrap();
            if t.adjoint_ordering_real() != s_ordered(n, m, &-&s, Algebra::Qp).unwrap() {
                return Check::fail(name, format!("symbolic real-s adjoint fails at ({n},{m})"));
            }
        }
    }
    Check::pass(name, format!("adjoint laws hold for indices up to ({max},{max})"))
}

// ---------------------------------------------------------------------------
// star / Moyal

fn random_qp_poly(rng: &mut Rng, max_total_deg: u32) -> PhasePoly {
    rng.phasepoly(VarPair::Qp, max_total_deg)
}

pub fn star_associativity(triples: u32, max_deg: u32) -> Check {
    let name = "star.associativity";
    let mut rng = Rng::new(53);
    let s = Scalar::sym_s();
    for i in 0..triples {
        let f = random_qp_poly(&mut rng, max_deg);
        let g = random_qp_poly(&mut rng, max_deg);
        let h = random_qp_poly(&mut rng, max_deg);
        let left = star(&star(&f, &g, &s).unwrap(), &h, &s).unwrap();
        let right = star(&f, &star(&g, &h, &s).unwrap(), &s).unwrap();
        if left != right {
            return Check::fail(name, format!("triple {i}: f = {f}; g = {g}; h = {h}"));
        }
    }
    Check::pass(name, format!("{triples} random degree-{max_deg} triples, symbolic s"))
}

pub fn moyal_hbar_structure(cases: u32) -> Check {
    let name = "star.bracket_hbar_structure";
    let mut rng = Rng::new(59);
    let s = Scalar::sym_s();
    for i in 0..cases {
        let f = random_qp_poly(&mut rng, 3);
        let g = random_qp_poly(&mut rng, 3);
        let bracket = moyal(&f, &g, &s).unwrap();
        // every term carries hbar
        let reduced = match bracket.div_exact_i_hbar() {
            Ok(v) => v,
            Err(_) => {
                return Check::fail(name, format!("case {i}: bracket has an hbar-free term"))
            }
        };
        // dropping the remaining hbar terms recovers the Poisson bracket
        let classical = reduced.hbar_free();
        let pb = poisson(&f, &g, PoissonConvention::Paper).unwrap();
        // both inputs carry no hbar by construction, so this is exact
        if classical != pb {
            return Check::fail(
                name,
                format!("case {i}: classical limit differs; f = {f}; g = {g}"),
            );
        }
    }
    Check::pass(
        name,
        format!("{cases} cases: bracket divisible by i*hbar, classical limit is the Poisson bracket"),
    )
}

pub fn series_matches_bracket(max_deg: u32) -> Check {
    let name = "star.series_matches_bracket";
    let s = Scalar::sym_s();
    for a1 in 0..=max_deg {
        for b1 in 0..=(max_deg - a1) {
            for a2 in 0..=max_deg {
                for b2 in 0..=(max_deg - a2) {
                    let f = PhasePoly::monomial(VarPair::Qp, a1, b1, Scalar::one()).unwrap();
                    let g = PhasePoly::monomial(VarPair::Qp, a2, b2, Scalar::one()).unwrap();
                    let full = moyal(&f, &g, &s).unwrap();
                    let series = moyal_series(&f, &g, &s, 3).unwrap();
                    if full != series {
                        return Check::fail(
                            name,
                            format!("monomials ({a1},{b1}) vs ({a2},{b2}): series differs"),
                        );
                    }
                }
            }
        }
    }
    Check::pass(name, format!("all monomial pairs of total degree <= {max_deg}"))
}

pub fn leading_corrections() -> Check {
    let name = "star.leading_corrections";
    // at s = 0 the first correction beyond the Poisson bracket carries
    // hbar^2 (after dividing by i hbar)
    for (f_deg, g_deg) in [((3, 0), (0, 3)), ((2, 1), (1, 2)), ((3, 1), (2, 3))] {
        let f = PhasePoly::monomial(VarPair::Qp, f_deg.0, f_deg.1, Scalar::one()).unwrap();
        let g = PhasePoly::monomial(VarPair::Qp, g_deg.0, g_deg.1, Scalar::one()).unwrap();
        let reduced = moyal(&f, &g, &Scalar::zero()).unwrap().div_exact_i_hbar().unwrap();
        let correction = &reduced - &poisson(&f, &g, PoissonConvention::Paper).unwrap();
        if let Some(k) = correction.min_hbar_pow() {
            if k < 2 {
                return Check::fail(
                    name,
                    format!("s = 0 correction of order hbar^{k} for {f} vs {g}"),
                );
            }
        }
    }
    // at s = +-1 an hbar^1 correction appears for q^2 vs p^2
    for s_val in [1i64, -1] {
        let f = PhasePoly::monomial(VarPair::Qp, 2, 0, Scalar::one()).unwrap();
        let g = PhasePoly::monomial(VarPair::Qp, 0, 2, Scalar::one()).unwrap();
        let reduced = moyal(&f, &g, &Scalar::from_int(s_val))
            .unwrap()
            .div_exact_i_hbar()
            .unwrap();
        let correction = &reduced - &poisson(&f, &g, PoissonConvention::Paper).unwrap();
        if correction.min_hbar_pow() != Some(1) {
            return Check::fail(name, format!("expected an hbar^1 correction at s = {s_val}"));
        }
    }
    Check::pass(name, "hbar-order of leading corrections matches at s = 0 and s = +-1")
}

pub fn jacobi_identity(cases: u32) -> Check {
    let name = "star.jacobi";
    let mut rng = Rng::new(61);
    let params = [Scalar::zero(), Scalar::one(), Scalar::from_rat(Rat::new((-1).into(), 2.into()))];
    for i in 0..cases {
        let f = random_qp_poly(&mut rng, 2);
        let g = random_qp_poly(&mut rng, 2);
        let h = random_qp_poly(&mut rng, 2);
        for s in &params {
            let total = &(&moyal(&f, &moyal(&g, &h, s).unwrap(), s).unwrap()
                + &moyal(&g, &moyal(&h, &f, s).unwrap(), s).unwrap())
                + &moyal(&h, &moyal(&f, &g, s).unwrap(), s).unwrap();
            if !total.is_zero() {
                return Check::fail(name, format!("case {i} at s = {s}"));
            }
        }
    }
    Check::pass(name, format!("{cases} random triples at three concrete parameters"))
}

// ---------------------------------------------------------------------------
// correspondence

pub fn quantize_symbol_round_trip(max: u32) -> Check {
    let name = "correspondence.round_trip";
    let s = Scalar::sym_s();
    let mut rng = Rng::new(67);
    for (vars, algebra) in [(VarPair::Qp, Algebra::Qp), (VarPair::BigZ, Algebra::AAdag)] {
        for n in 0..=max {
            for m in 0..=max {
                let f = PhasePoly::monomial(vars, n, m, Scalar::one()).unwrap();
                let round = symbol(&quantize(&f, &s).unwrap(), &s);
                if round != f {
                    return Check::fail(
                        name,
                        format!("symbol(quantize) not identity at ({n},{m}) on {}", vars.name()),
                    );
                }
                let a = OpPoly::monomial(algebra, n, m, Scalar::one()).unwrap();
                let round = quantize(&symbol(&a, &s), &s).unwrap();
                if round != a {
                    return Check::fail(
                        name,
                        format!("quantize(symbol) not identity at ({n},{m}) on {:?}", algebra),
                    );
                }
            }
        }
        // a few random polynomials for good measure
        for _ in 0..5 {
            let f = rng.phasepoly(vars, max);
            if symbol(&quantize(&f, &s).unwrap(), &s) != f {
                return Check::fail(name, format!("random round trip failed on {}", vars.name()));
            }
        }
    }
    Check::pass(name, format!("both directions, both pairs, indices up to ({max},{max}), symbolic s"))
}

/// Which operator-product order the star product corresponds to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StarDirection {
    /// quantize(f (star) g) == quantize(f) * quantize(g)
    Homomorphic,
    /// quantize(f (star) g) == quantize(g) * quantize(f)
    AntiHomomorphic,
}

/// Empirical direction test: for every monomial pair up to `max`, exactly
/// one of the two orders must reproduce the quantized star product, and it
/// must be the same order throughout.
pub fn star_direction(max: u32) -> (Check, Option<StarDirection>) {
    let name = "correspondence.star_direction";
    let s = Scalar::sym_s();
    let mut fg_all = true;
    let mut gf_all = true;
    let mut pinned = false;
    for n in 0..=max {
        for m in 0..=max {
            for k in 0..=max {
                for l in 0..=max {
                    let f = PhasePoly::monomial(VarPair::Qp, n, m, Scalar::one()).unwrap();
                    let g = PhasePoly::monomial(VarPair::Qp, k, l, Scalar::one()).unwrap();
                    let lhs = quantize(&star(&f, &g, &s).unwrap(), &s).unwrap();
                    let qf = quantize(&f, &s).unwrap();
                    let qg = quantize(&g, &s).unwrap();
                    let fg = lhs == qf.mul(&qg).unwrap();
                    let gf = lhs == qg.mul(&qf).unwrap();
                    if !fg && !gf {
                        return (
                            Check::fail(
                                name,
                                format!("neither product order matches at ({n},{m}) vs ({k},{l})"),
                            ),
                            None,
                        );
                    }
                    fg_all &= fg;
                    gf_all &= gf;
                    pinned |= fg != gf;
                }
            }
        }
    }
    if !pinned {
        return (
            Check::fail(name, "direction never pinned: all tested pairs commute"),
            None,
        );
    }
    match (fg_all, gf_all) {
        (true, false) => (
            Check::pass(
                name,
                "uniform direction: quantize(f star g) = quantize(f) quantize(g) (homomorphic)",
            ),
            Some(StarDirection::Homomorphic),
        ),
        (false, true) => (
            Check::pass(
                name,
                "uniform direction: quantize(f star g) = quantize(g) quantize(f) (anti-homomorphic)",
            ),
            Some(StarDirection::AntiHomomorphic),
        ),
        _ => (
            Check::fail(name, "no uniform product order across the tested pairs"),
            None,
        ),
    }
}

pub fn bopp_symbol_routes(max: u32) -> Check {
    let name = "correspondence.bopp_symbol_routes";
    let r = Scalar::sym_r();
    let s = Scalar::sym_s();
    for n in 0..=max {
        for m in 0..=max {
            let left = match bopp_symbol(n, m, &r, &s) {
                Ok(v) => v,
                Err(e) => return Check::fail(name, err_str(e)),
            };
            let right = bopp_symbol_right(n, m, &r, &s).unwrap();
            if left != right {
                return Check::fail(name, format!("left/right routes differ at ({n},{m})"));
            }
            let via_symbol = symbol(&s_ordered(n, m, &r, Algebra::Qp).unwrap(), &-&s);
            if left != via_symbol {
                return Check::fail(
                    name,
                    format!("Bopp route differs from the symbol map at ({n},{m})"),
                );
            }
        }
    }
    Check::pass(name, format!("both routes and the symbol pairing agree up to ({max},{max}), symbolic r and s"))
}

pub fn generator_table_low_rows() -> Check {
    let name = "correspondence.generator_table_low_rows";
    let s = Scalar::sym_s();
    let zero = Scalar::zero();
    let i_hbar = Scalar::i_hbar();
    let half = Scalar::from_rat(Rat::new(1.into(), 2.into()));
    let mono = |n, m, c: Scalar| OpPoly::monomial(Algebra::Qp, n, m, c).unwrap();
    let dmono = |key, c: Scalar| DiffOp::monomial(VarPair::Qp, key, c).unwrap();

    let expected: Vec<(u32, u32, OpPoly, DiffOp)> = vec![
        (0, 0, OpPoly::one(Algebra::Qp), DiffOp::zero(VarPair::Qp)),
        (1, 0, mono(1, 0, Scalar::one()), dmono((0, 0, 0, 1), -&i_hbar)),
        (0, 1, mono(0, 1, Scalar::one()), dmono((0, 0, 1, 0), i_hbar.clone())),
        (
            1,
            1,
            &mono(1, 1, Scalar::one()) - &mono(0, 0, &i_hbar * &half),
            &dmono((1, 0, 1, 0), i_hbar.clone()) + &dmono((0, 1, 0, 1), -&i_hbar),
        ),
        (
            2,
            0,
            mono(2, 0, Scalar::one()),
            &dmono((1, 0, 0, 1), -&(&Scalar::from_int(2) * &i_hbar))
                + &dmono((0, 0, 0, 2), &s * &Scalar::hbar().pow(2)),
        ),
        (
            0,
            2,
            mono(0, 2, Scalar::one()),
            &dmono((0, 1, 1, 0), &Scalar::from_int(2) * &i_hbar)
                + &dmono((0, 0, 2, 0), -&(&s * &Scalar::hbar().pow(2))),
        ),
    ];
    let table = match crate::winfinity::generator_table(&zero, &s, 2, 2) {
        Ok(t) => t,
        Err(e) => return Check::fail(name, err_str(e)),
    };
    for (n, m, op, gamma) in expected {
        let row = table.iter().find(|r| (r.n, r.m) == (n, m)).unwrap();
        if row.op != op {
            return Check::fail(name, format!("operator row ({n},{m}) is {}", row.op));
        }
        if row.gamma != gamma {
            return Check::fail(name, format!("generator row ({n},{m}) is {}", row.gamma));
        }
    }
    Check::pass(name, "all six printed rows reproduced exactly, symbolic s")
}

pub fn bopp_commutator_table() -> Check {
    let name = "correspondence.bopp_commutators";
    let s = Scalar::sym_s();
    let cases: [(BoppBasis, VarPair, Scalar); 4] = [
        (BoppBasis::D, VarPair::XiEta, -&Scalar::i_hbar()),
        (BoppBasis::D, VarPair::SmallZ, Scalar::from_int(-1)),
        (BoppBasis::Delta, VarPair::Qp, -&Scalar::i_hbar()),
        (BoppBasis::Delta, VarPair::BigZ, Scalar::one()),
    ];
    for (basis, vars, left_comm) in cases {
        let (ql, pl) = bopp_pair(basis, Side::Left, &s, vars).unwrap();
        let (qr, pr) = bopp_pair(basis, Side::Right, &s, vars).unwrap();
        let want = DiffOp::one(vars).scale(&left_comm);
        if ql.commutator(&pl).unwrap() != want {
            return Check::fail(name, format!("left commutator wrong on {}", vars.name()));
        }
        if qr.commutator(&pr).unwrap() != -&want {
            return Check::fail(name, format!("right commutator wrong on {}", vars.name()));
        }
        for (a, b) in [(&ql, &qr), (&ql, &pr), (&pl, &qr), (&pl, &pr)] {
            if !a.commutator(b).unwrap().is_zero() {
                return Check::fail(name, format!("cross commutator nonzero on {}", vars.name()));
            }
        }
    }
    Check::pass(name, "all four families: left/right pairs canonical, cross pairs commute")
}

// ---------------------------------------------------------------------------
// operator algebra structure

pub fn isomorphism_all(max: u32) -> Check {
    let name = "winfinity.isomorphism";
    let s = Scalar::sym_s();
    let mut gammas = std::collections::BTreeMap::new();
    for n in 0..=max {
        for m in 0..=max {
            gammas.insert((n, m), gamma_generator(n, m, &s, &-&s).unwrap());
        }
    }
    for n in 0..=max {
        for m in 0..=max {
            for k in 0..=max {
                for l in 0..=max {
                    let target = PhasePoly::monomial(VarPair::Qp, k, l, Scalar::one()).unwrap();
                    let lhs = gammas[&(n, m)].apply(&target).unwrap();
                    let source = PhasePoly::monomial(VarPair::Qp, n, m, Scalar::one()).unwrap();
                    let rhs = moyal(&source, &target, &s).unwrap();
                    if lhs != rhs {
                        return Check::fail(
                            name,
                            format!("bracket isomorphism fails at ({n},{m}) vs ({k},{l})"),
                        );
                    }
                }
            }
        }
    }
    Check::pass(name, format!("all quadruples up to {max}, symbolic s"))
}

pub fn central_extension_all(max: u32) -> Check {
    let name = "winfinity.central_extension";
    let s = Scalar::sym_s();
    for r_val in [0i64, 1, -1] {
        let r = Scalar::from_int(r_val);
        for n in 0..=max {
            for m in 0..=max {
                for k in 0..=max {
                    for l in 0..=max {
                        let rep = match central_extension_report(n, m, k, l, &r, &s) {
                            Ok(v) => v,
                            Err(e) => return Check::fail(name, err_str(e)),
                        };
                        if !rep.pass {
                            return Check::fail(
                                name,
                                format!(
                                    "generator commutator differs at ({n},{m})x({k},{l}), r = {r_val}"
                                ),
                            );
                        }
                        // the generator commutator vanishes exactly when the
                        // operator commutator is purely central
                        let expansion = structure_expand(n, m, k, l, &r).unwrap();
                        let purely_central = expansion
                            .terms
                            .iter()
                            .all(|((a, b), _)| (*a, *b) == (0, 0));
                        if rep.commutator.is_zero() != purely_central {
                            return Check::fail(
                                name,
                                format!("centrality mismatch at ({n},{m})x({k},{l})"),
                            );
                        }
                    }
                }
            }
        }
    }
    Check::pass(name, format!("all quadruples up to {max}, r in {{0, 1, -1}}, symbolic s"))
}

pub fn structure_antisymmetry_jacobi(cases: u32) -> Check {
    let name = "winfinity.structure_antisymmetry_jacobi";
    let mut rng = Rng::new(71);
    let r = Scalar::zero();
    for i in 0..cases {
        let idx = |rng: &mut Rng| (rng.below(4) as u32, rng.below(4) as u32);
        let (n, m) = idx(&mut rng);
        let (k, l) = idx(&mut rng);
        let (u, v) = idx(&mut rng);
        // antisymmetry at the expansion level
        let fwd = structure_expand(n, m, k, l, &r).unwrap();
        let bwd = structure_expand(k, l, n, m, &r).unwrap();
        let mut negated: std::collections::BTreeMap<(u32, u32), Scalar> = Default::default();
        for (key, c) in &bwd.terms {
            negated.insert(*key, -c);
        }
        let fwd_map: std::collections::BTreeMap<(u32, u32), Scalar> =
            fwd.terms.iter().cloned().collect();
        if fwd_map != negated {
            return Check::fail(name, format!("expansion not antisymmetric on case {i}"));
        }
        // Jacobi identity on the operator side
        let t = |a, b| s_ordered(a, b, &r, Algebra::Qp).unwrap();
        let (ta, tb, tc) = (t(n, m), t(k, l), t(u, v));
        let jac = &(&ta.commutator(&tb.commutator(&tc).unwrap()).unwrap()
            + &tb.commutator(&tc.commutator(&ta).unwrap()).unwrap())
            + &tc.commutator(&ta.commutator(&tb).unwrap()).unwrap();
        if !jac.is_zero() {
            return Check::fail(name, format!("Jacobi identity fails on case {i}"));
        }
    }
    Check::pass(name, format!("{cases} random index triples"))
}

// ---------------------------------------------------------------------------
// numerical oracle

pub fn fock_generator_commutators() -> Check {
    let name = "fock.generator_commutators";
    let cfg = FockConfig::new(32);
    match generator_commutator_check(&cfg) {
        Ok(rep) if rep.pass => Check::pass(name, rep.detail),
        Ok(rep) => Check::fail(name, format!("deviation {:.3e}: {}", rep.deviation, rep.detail)),
        Err(e) => Check::fail(name, err_str(e)),
    }
}

pub fn fock_route_matrices(max: u32) -> Check {
    let name = "fock.route_matrices";
    let cfg = FockConfig::new(32);
    for s_val in [0.0, 1.0, -1.0, 0.5, -0.5] {
        for n in 0..=max {
            for m in 0..=max {
                match route_agreement_check(n, m, s_val, &cfg) {
                    Ok(rep) if rep.pass => {}
                    Ok(rep) => {
                        return Check::fail(
                            name,
                            format!("({n},{m}) at s = {s_val}: deviation {:.3e}", rep.deviation),
                        )
                    }
                    Err(e) => return Check::fail(name, err_str(e)),
                }
            }
        }
    }
    Check::pass(name, format!("numeric routes agree up to ({max},{max}) at five parameters"))
}

pub fn fock_displacement_small() -> Check {
    let name = "fock.displacement";
    let cfg = FockConfig::new(64);
    let gens_poly = {
        let q = OpPoly::x(Algebra::Qp);
        let p = OpPoly::y(Algebra::Qp);
        let qp = q.mul(&p).unwrap().subst_hbar(&coeff_int(1));
        [q, p, qp]
    };
    for f in &gens_poly {
        for (xi, eta) in [(0.1, 0.1), (0.05, -0.08), (-0.1, 0.02)] {
            match displacement_check(xi, eta, f, &cfg) {
                Ok(rep) if rep.pass => {}
                Ok(rep) => {
                    return Check::fail(
                        name,
                        format!(
                            "({xi},{eta}) on {f}: deviation {:.3e} vs tol {:.1e}",
                            rep.deviation, rep.tol
                        ),
                    )
                }
                Err(e) => return Check::fail(name, err_str(e)),
            }
        }
    }
    Check::pass(name, "small-amplitude displacement conjugation within 1e-8 at dimension 64")
}

pub fn fock_displacement_monotonicity() -> Check {
    let name = "fock.displacement_monotonicity";
    // fixed comparison rank, doubling truncation: leakage must shrink
    let f = OpPoly::x(Algebra::Qp)
        .mul(&OpPoly::y(Algebra::Qp))
        .unwrap()
        .subst_hbar(&coeff_int(1));
    let dev_at = |dim: usize| -> Result<f64> {
        let mut cfg = FockConfig::new(dim);
        cfg.proj_rank = 24;
        Ok(displacement_check(0.3, 0.2, &f, &cfg)?.deviation)
    };
    let (d32, d64) = match (dev_at(32), dev_at(64)) {
        (Ok(a), Ok(b)) => (a, b),
        _ => return Check::fail(name, "displacement check errored"),
    };
    if d64 < d32 {
        Check::pass(
            name,
            format!("deviation shrinks with the truncation: {d32:.3e} at 32 -> {d64:.3e} at 64"),
        )
    } else {
        Check::fail(name, format!("no improvement: {d32:.3e} at 32 vs {d64:.3e} at 64"))
    }
}

pub fn fock_derivative_convergence() -> Check {
    let name = "fock.derivative_identities";
    let cfg = FockConfig::new(64);
    let point = (0.2, 0.1);
    let h = 1e-4;
    for (s_val, n, m, r_val) in [
        (Complex64::new(0.0, 0.0), 0, 0, 0.0),
        (Complex64::new(0.0, 0.0), 1, 0, 0.0),
        (Complex64::new(0.5, 0.0), 0, 1, 1.0),
        (Complex64::new(0.0, 0.0), 1, 1, 0.0),
        (Complex64::new(0.25, 0.0), 1, 1, -1.0),
    ] {
        let rep = match derivative_check(s_val, point, h, n, m, r_val, &cfg) {
            Ok(v) => v,
            Err(e) => return Check::fail(name, err_str(e)),
        };
        if !rep.basis_derivative.pass {
            return Check::fail(
                name,
                format!(
                    "basis derivative err {:.3e} at s = {s_val}",
                    rep.basis_derivative.err_h
                ),
            );
        }
        if !rep.generator_action.pass {
            return Check::fail(
                name,
                format!(
                    "generator action err {:.3e} at ({n},{m}), r = {r_val}",
                    rep.generator_action.err_h
                ),
            );
        }
        // second-order convergence where the finite difference dominates
        let ratio = rep.basis_derivative.ratio;
        if !(0.1..=0.45).contains(&ratio) {
            return Check::fail(
                name,
                format!("basis derivative not O(h^2): ratio {ratio:.3} at s = {s_val}"),
            );
        }
    }
    Check::pass(name, "derivative identities hold with second-order convergence")
}

/// Run the full suite with its default parameters.
pub fn run_all() -> Vec<Check> {
    let mut checks = vec![
        scalar_ring_axioms(200),
        oppoly_associativity(60, 4),
        adjoint_involution(120),
        diffop_composition(80),
        ordering_routes(5, 5),
        conversion_round_trip(6, 6),
        hermiticity(4),
        star_associativity(100, 3),
        moyal_hbar_structure(60),
        series_matches_bracket(3),
        leading_corrections(),
        jacobi_identity(25),
        quantize_symbol_round_trip(6),
    ];
    checks.push(star_direction(3).0);
    checks.extend([
        bopp_symbol_routes(4),
        generator_table_low_rows(),
        bopp_commutator_table(),
        isomorphism_all(4),
        central_extension_all(3),
        structure_antisymmetry_jacobi(40),
        fock_generator_commutators(),
        fock_route_matrices(4),
        fock_displacement_small(),
        fock_displacement_monotonicity(),
        fock_derivative_convergence(),
    ]);
    checks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn direction_is_anti_homomorphic() {
        let (check, dir) = star_direction(2);
        assert!(check.pass, "{}", check.detail);
        assert_eq!(dir, Some(StarDirection::AntiHomomorphic));
    }

    #[test]
    fn small_suite_passes() {
        for check in [
            scalar_ring_axioms(30),
            oppoly_associativity(8, 3),
            adjoint_involution(20),
            diffop_composition(10),
            ordering_routes(3, 3),
            conversion_round_trip(3, 3),
            hermiticity(2),
            star_associativity(10, 2),
            moyal_hbar_structure(10),
            series_matches_bracket(2),
            leading_corrections(),
            jacobi_identity(4),
            quantize_symbol_round_trip(3),
            bopp_symbol_routes(2),
            generator_table_low_rows(),
            bopp_commutator_table(),
            isomorphism_all(2),
            central_extension_all(2),
            structure_antisymmetry_jacobi(8),
        ] {
            assert!(check.pass, "{}: {}", check.name, check.detail);
        }
    }
}

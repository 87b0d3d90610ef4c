//! Rational ordinary generating functions over arbitrary-precision integers.
//!
//! Rational functions are kept unreduced; equality is decided by
//! cross-multiplication, and coefficients come from the linear recurrence the
//! denominator induces. Floating point appears only in the dominant-pole
//! asymptotics.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GfError {
    #[error("division by a series with zero constant term")]
    DivisionByZeroConstant,
    #[error("star/plus require a series with zero constant term")]
    NonzeroConstantTerm,
    #[error("denominator must have a nonzero constant term")]
    ZeroConstantDenominator,
    #[error("no real pole found in (0, 1)")]
    NoDominantPole,
    #[error("dominant pole is not simple")]
    NonSimplePole,
}

/// Dense polynomial with `BigInt` coefficients, index = degree. Canonical
/// form: no trailing zero coefficient; the zero polynomial has no
/// coefficients at all.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Polynomial {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Polynomial {
        Polynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Polynomial {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Polynomial {
        Polynomial::from_ints(&[1])
    }

    /// The monomial `x`.
    pub fn x() -> Polynomial {
        Polynomial::from_ints(&[0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = vec![BigInt::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Polynomial::new(out)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }

    pub fn derivative(&self) -> Polynomial {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| {
            acc * x + c.to_f64().expect("coefficient fits in f64")
        })
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

/// A ratio of polynomials representing a formal power series; the denominator
/// carries a nonzero constant term so coefficient extraction is well defined.
#[derive(Debug, Clone, Eq)]
pub struct RationalGf {
    num: Polynomial,
    den: Polynomial,
}

impl PartialEq for RationalGf {
    /// Cross-multiplication equality: no reduced form is ever computed.
    fn eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl RationalGf {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<RationalGf, GfError> {
        if den.constant_term().is_zero() {
            return Err(GfError::ZeroConstantDenominator);
        }
        Ok(RationalGf { num, den })
    }

    pub fn from_ints(num: &[i64], den: &[i64]) -> RationalGf {
        RationalGf::new(Polynomial::from_ints(num), Polynomial::from_ints(den))
            .expect("literal denominator has nonzero constant term")
    }

    pub fn zero() -> RationalGf {
        RationalGf::from_ints(&[], &[1])
    }

    pub fn one() -> RationalGf {
        RationalGf::from_ints(&[1], &[1])
    }

    /// The series variable itself.
    pub fn x() -> RationalGf {
        RationalGf::from_ints(&[0, 1], &[1])
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn constant_term_is_zero(&self) -> bool {
        self.num.constant_term().is_zero()
    }

    pub fn add(&self, other: &RationalGf) -> RationalGf {
        RationalGf {
            num: self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            den: self.den.mul(&other.den),
        }
    }

    pub fn sub(&self, other: &RationalGf) -> RationalGf {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RationalGf {
        RationalGf {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RationalGf) -> RationalGf {
        RationalGf {
            num: self.num.mul(&other.num),
            den: self.den.mul(&other.den),
        }
    }

    pub fn div(&self, other: &RationalGf) -> Result<RationalGf, GfError> {
        if other.num.constant_term().is_zero() {
            return Err(GfError::DivisionByZeroConstant);
        }
        Ok(RationalGf {
            num: self.num.mul(&other.den),
            den: self.den.mul(&other.num),
        })
    }

    pub fn pow(&self, k: u32) -> RationalGf {
        let mut out = RationalGf::one();
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// `1 / (1 - F)`: arbitrarily many consecutive occurrences. Requires a
    /// zero constant term.
    pub fn star(&self) -> Result<RationalGf, GfError> {
        if !self.constant_term_is_zero() {
            return Err(GfError::NonzeroConstantTerm);
        }
        RationalGf::new(self.den.clone(), self.den.sub(&self.num))
    }

    /// `F / (1 - F)`: one or more consecutive occurrences.
    pub fn plus(&self) -> Result<RationalGf, GfError> {
        if !self.constant_term_is_zero() {
            return Err(GfError::NonzeroConstantTerm);
        }
        RationalGf::new(self.num.clone(), self.den.sub(&self.num))
    }

    /// `1 + F`: at most one occurrence.
    pub fn opt(&self) -> RationalGf {
        RationalGf {
            num: self.den.add(&self.num),
            den: self.den.clone(),
        }
    }

    /// Substitutes `inner` for the variable (exactly, as rational functions).
    pub fn substitute(&self, inner: &RationalGf) -> RationalGf {
        let compose = |p: &Polynomial| {
            let mut acc = RationalGf::zero();
            for c in p.coeffs().iter().rev() {
                let c_gf = RationalGf::new(Polynomial::new(vec![c.clone()]), Polynomial::one())
                    .expect("constant");
                acc = acc.mul(inner).add(&c_gf);
            }
            acc
        };
        compose(&self.num)
            .div(&compose(&self.den))
            .expect("denominator keeps a nonzero constant term under substitution")
    }

    /// Exact series coefficients `c_0 ..= c_max` from the recurrence
    /// `den (*) c = num`. Panics if some coefficient is not an integer;
    /// every counting series here has a unit constant denominator term.
    pub fn coefficients(&self, max: usize) -> Vec<BigInt> {
        let d0 = self.den.constant_term();
        assert!(
            !d0.is_zero(),
            "denominator constant term is nonzero by construction"
        );
        let mut out: Vec<BigInt> = Vec::with_capacity(max + 1);
        for k in 0..=max {
            let mut acc = self.num.coeff(k);
            for j in 1..=k.min(self.den.degree().unwrap_or(0)) {
                acc -= self.den.coeff(j) * &out[k - j];
            }
            let (q, r) = num_integer_div_rem(&acc, &d0);
            assert!(r.is_zero(), "series coefficients are integers");
            out.push(q);
        }
        out
    }

    /// Location and strength of the dominant real pole in `(0, 1)`: returns
    /// `(rho, growth, constant)` with `growth = 1/rho` and
    /// `constant = -num(rho) / (rho * den'(rho))`, so that the coefficients
    /// behave like `constant * growth^n`.
    pub fn dominant_asymptotics(&self) -> Result<Asymptotics, GfError> {
        let den = |x: f64| self.den.eval_f64(x);
        // bracket the smallest positive real root by scanning
        let steps = 100_000usize;
        let h = 1.0 / steps as f64;
        let mut lo = 0.0f64;
        let mut hi = 0.0f64;
        let mut found = false;
        let mut prev = den(f64::MIN_POSITIVE);
        for k in 1..steps {
            let x = k as f64 * h;
            let v = den(x);
            if v == 0.0 || v.signum() != prev.signum() {
                lo = (k - 1) as f64 * h;
                hi = x;
                found = true;
                break;
            }
            prev = v;
        }
        if !found {
            return Err(GfError::NoDominantPole);
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if den(mid).signum() == den(lo).signum() {
                lo = mid;
            } else {
                hi = mid;
            }
            if hi - lo < 1e-15 {
                break;
            }
        }
        let mut rho = 0.5 * (lo + hi);
        let dprime = self.den.derivative();
        for _ in 0..5 {
            let slope = dprime.eval_f64(rho);
            if slope == 0.0 {
                return Err(GfError::NonSimplePole);
            }
            rho -= den(rho) / slope;
        }
        let slope = dprime.eval_f64(rho);
        if slope.abs() < 1e-9 {
            return Err(GfError::NonSimplePole);
        }
        let constant = -self.num.eval_f64(rho) / (rho * slope);
        Ok(Asymptotics {
            rho,
            growth: 1.0 / rho,
            constant,
        })
    }
}

fn num_integer_div_rem(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    (a / b, a % b)
}

impl fmt::Display for RationalGf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Asymptotics {
    pub rho: f64,
    pub growth: f64,
    pub constant: f64,
}

/// `f = x / (1 - x)`: one required value with arbitrarily many repeats, the
/// atom that absorbs duplicated holdings.
pub fn geometric_unit() -> RationalGf {
    RationalGf::from_ints(&[0, 1], &[1, -1])
}

/// Generating functions of the nontrivial blocks, each taken between weak
/// boundaries, in terms of the atom `g`.
pub struct BlockSeries {
    pub w: RationalGf,
    pub u: RationalGf,
    pub c: RationalGf,
    pub b: RationalGf,
    pub c2: RationalGf,
}

/// Blocks over an arbitrary atom: W needs the run `b..b+k`, U pairs
/// `b,b+1` repeated, C the same ending low, C_2 exactly three values.
pub fn block_series_in(g: &RationalGf) -> BlockSeries {
    let g2 = g.mul(g);
    let w = g.plus().expect("atom has zero constant term");
    let u = g
        .pow(4)
        .mul(&g2.star().expect("g^2 has zero constant term"));
    let c = g
        .pow(3)
        .mul(&g2.star().expect("g^2 has zero constant term"));
    let b = u.add(&c);
    let c2 = g.pow(3);
    BlockSeries { w, u, c, b, c2 }
}

/// Blocks with duplicated holdings allowed: the atom is `f = x/(1-x)`.
pub fn block_series() -> BlockSeries {
    block_series_in(&geometric_unit())
}

/// Blocks counted by distinct intervals only (no duplicated holdings): the
/// atom is the plain variable.
pub fn block_series_nodh() -> BlockSeries {
    block_series_in(&RationalGf::x())
}

/// Assembles the hereditary-semiorder series from the boundary grammar, in
/// terms of the atom `g`. Segments between strong boundaries are
/// `W? (B+ W)* B*`; around each optional boundary they instead end in `B+`
/// or start with `W` or `C_2`. Every strong and every optional boundary
/// contributes one factor of `g`.
pub fn hereditary_gf_from_grammar_in(g: &RationalGf) -> RationalGf {
    let BlockSeries { w, b, c2, .. } = block_series_in(g);
    let b_plus = b.plus().expect("B has zero constant term");
    // 1 / (1 - B+ W), shared spine of every segment shape
    let spine = b_plus.mul(&w).star().expect("B+ W has zero constant term");
    let b_star = b.star().expect("B has zero constant term");
    let w_spine = w.mul(&b_plus).star().expect("W B+ has zero constant term");

    let x_ss = g.mul(&w.opt()).mul(&spine).mul(&b_star);
    let x_so = g.mul(&w.opt()).mul(&spine).mul(&b_plus);
    let x_oo = g
        .mul(&w)
        .mul(&spine)
        .mul(&b_plus)
        .add(&g.mul(&c2).mul(&b_star).mul(&w_spine));
    let x_os = g
        .mul(&w)
        .mul(&spine)
        .mul(&b_star)
        .add(&g.mul(&c2).mul(&b_star).mul(&w_spine).mul(&w.opt()));

    let ss_star = x_ss.star().expect("X_ss has zero constant term");
    let optional_run = x_so
        .mul(&x_oo.star().expect("X_oo has zero constant term"))
        .mul(&x_os)
        .mul(&ss_star);
    g.mul(&ss_star)
        .mul(&optional_run.star().expect("run has zero constant term"))
}

/// Assembles the dimension-at-most-2 series from its grammar in terms of the
/// atom `g`. Between consecutive T1 blocks a C may only open or close a
/// segment that touches the T1; nonempty brackets subtract the empty word.
pub fn dim2_gf_from_grammar_in(g: &RationalGf) -> RationalGf {
    let BlockSeries { w, u, c, .. } = block_series_in(g);
    let one = RationalGf::one();
    let u_star = u.star().expect("U has zero constant term");
    let wu_star = w
        .mul(&u.plus().expect("U"))
        .star()
        .expect("W U+ has zero constant term");
    let uw_star = u
        .plus()
        .expect("U")
        .mul(&w)
        .star()
        .expect("U+ W has zero constant term");
    // U* (W U+)* W?  and its mirror  W? (U+ W)* U*
    let middle = u_star.mul(&wu_star).mul(&w.opt());
    let middle_rev = w.opt().mul(&uw_star).mul(&u_star);

    let a0 = c
        .opt()
        .mul(&middle.sub(&one))
        .mul(&c.opt())
        .add(&c.mul(&c.opt()));
    let a_s = c
        .opt()
        .mul(&middle)
        .sub(&one)
        .mul(g)
        .mul(
            &middle
                .sub(&one)
                .mul(g)
                .star()
                .expect("segment has zero constant term"),
        )
        .mul(&middle_rev.mul(&c.opt()).sub(&one));
    let a = a0.add(&a_s);

    let t1_plus = g.plus().expect("atom");
    let t1_star = t1_plus.opt();
    g.mul(&a.mul(g).opt())
        .mul(
            &t1_plus
                .mul(g)
                .mul(&a)
                .star()
                .expect("T1+ | A has zero constant term"),
        )
        .mul(&t1_star)
}

pub fn hereditary_gf_from_grammar() -> RationalGf {
    hereditary_gf_from_grammar_in(&geometric_unit())
}

pub fn dim2_gf_from_grammar() -> RationalGf {
    dim2_gf_from_grammar_in(&geometric_unit())
}

/// Closed form for the hereditary-semiorder counting series.
pub fn hereditary_gf() -> RationalGf {
    RationalGf::from_ints(&[0, 1, -6, 12, -9, 1], &[1, -8, 23, -29, 14, -1])
}

/// Closed form for the dimension-at-most-2 counting series.
pub fn dim2_gf() -> RationalGf {
    RationalGf::from_ints(
        &[0, 1, -10, 42, -96, 129, -101, 41, -5],
        &[1, -12, 61, -172, 294, -311, 197, -66, 7],
    )
}

/// Hereditary semiorders with no duplicated holdings; the coefficient index
/// counts points of the NODH poset.
pub fn hereditary_nodh_gf() -> RationalGf {
    RationalGf::from_ints(&[0, -1, 2, 0, -1, 1], &[-1, 3, -1, -2, 2])
}

/// Dimension-at-most-2 semiorders with no duplicated holdings.
pub fn dim2_nodh_gf() -> RationalGf {
    RationalGf::from_ints(
        &[0, -1, 3, -3, 1, 0, -1, 1, -1],
        &[-1, 4, -5, 2, 1, -1, 1, -1, 1],
    )
}

/// `C(2n, n) / (n + 1)`, the number of unlabeled semiorders on `n` points.
pub fn catalan(n: u64) -> BigInt {
    let mut c = BigInt::from(1);
    // C(2n, n) built incrementally, then divided by n + 1
    for k in 0..n {
        c = c * BigInt::from(2 * (2 * k + 1)) / BigInt::from(k + 1);
    }
    let (q, r) = num_integer_div_rem(&c, &BigInt::from(n + 1));
    debug_assert!(r.is_zero());
    q
}

fn factorial(n: u64) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// Trinomial coefficient `n! / (a! b! c!)` with `a + b + c = n`.
fn trinomial(n: u64, a: u64, b: u64, c: u64) -> BigInt {
    debug_assert_eq!(a + b + c, n);
    let num = factorial(n);
    let den = factorial(a) * factorial(b) * factorial(c);
    let (q, r) = num_integer_div_rem(&num, &den);
    debug_assert!(r.is_zero());
    q
}

/// Number of semiorders on `n` points with no duplicated holdings, by the
/// multinomial difference formula.
pub fn nodh_semiorder_count(n: u64) -> BigInt {
    assert!(n >= 1);
    let mut total = BigInt::zero();
    for a in 0..=(n - 1) / 2 {
        total += trinomial(n - 1, a, n - 1 - 2 * a, a);
    }
    for a in 2..=n.div_ceil(2) {
        total -= trinomial(n - 1, a, n + 1 - 2 * a, a - 2);
    }
    total
}

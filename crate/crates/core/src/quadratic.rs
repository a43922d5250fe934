//! Exact arithmetic in the real quadratic field Q(√d).
//!
//! Every value is held as `(a + b√d)/c` with unbounded integer coefficients,
//! normalized so that `c > 0` and `gcd(a, b, c) = 1`. With that normalization
//! two values over the same radicand are equal exactly when their coefficients
//! are equal, which lets ordered and hashed collections key on them directly.
//!
//! Signs are decided with integer arithmetic only: `a + b√d` has the sign of
//! `a` and `b` when they agree, and otherwise the sign of whichever of `a²` and
//! `b²d` dominates. Coefficients that fit in 64 bits go through a 128-bit path
//! with overflow checks; everything else falls back to big integers.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::isqrt::{exact_sqrt, isqrt, isqrt_u128};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuadError {
    #[error("radicand {0} is a perfect square, so the value would be rational")]
    PerfectSquareD(String),
    #[error("alpha has no irrational part (b = 0)")]
    RationalAlpha,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("malformed alpha spec {0:?}; expected sqrt:<d>, quad:<a>:<b>:<c>:<d> or golden")]
    MalformedSpec(String),
    #[error("cannot mix values over sqrt({0}) and sqrt({1})")]
    MixedRadicand(u64, u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    fn of_i128(x: i128) -> Sign {
        match x.cmp(&0) {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }

    fn of_big(x: &BigInt) -> Sign {
        if x.is_zero() {
            Sign::Zero
        } else if x.is_negative() {
            Sign::Negative
        } else {
            Sign::Positive
        }
    }

    pub fn to_ordering(self) -> Ordering {
        match self {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }
}

/// An exact element `(a + b√d)/c` of Q(√d).
#[derive(Clone, PartialEq, Eq)]
pub struct QuadValue {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: u64,
}

impl Hash for QuadValue {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.a.hash(state);
        self.b.hash(state);
        self.c.hash(state);
        self.d.hash(state);
    }
}

fn is_perfect_square(d: u64) -> bool {
    let r = isqrt_u128(d as u128);
    r * r == d as u128
}

fn check_radicand(d: u64) -> Result<(), QuadError> {
    if is_perfect_square(d) {
        Err(QuadError::PerfectSquareD(d.to_string()))
    } else {
        Ok(())
    }
}

/// Sign of `a + b√d` for machine integers; `None` if an intermediate overflows.
fn sign_small(a: i128, b: i128, d: u64) -> Option<Sign> {
    let sa = Sign::of_i128(a);
    let sb = Sign::of_i128(b);
    if sb == Sign::Zero || sa == sb {
        return Some(sa);
    }
    if sa == Sign::Zero {
        return Some(sb);
    }
    let a2 = a.checked_mul(a)?;
    let b2d = b.checked_mul(b)?.checked_mul(d as i128)?;
    Some(match a2.cmp(&b2d) {
        Ordering::Equal => Sign::Zero,
        Ordering::Greater => sa,
        Ordering::Less => sb,
    })
}

fn sign_big(a: &BigInt, b: &BigInt, d: u64) -> Sign {
    let sa = Sign::of_big(a);
    let sb = Sign::of_big(b);
    if sb == Sign::Zero || sa == sb {
        return sa;
    }
    if sa == Sign::Zero {
        return sb;
    }
    let a2 = a * a;
    let b2d = b * b * BigInt::from(d);
    match a2.cmp(&b2d) {
        Ordering::Equal => Sign::Zero,
        Ordering::Greater => sa,
        Ordering::Less => sb,
    }
}

/// `⌊(a + b√d)/c⌋` for `c > 0`.
///
/// With `s = ⌊b√d⌋` the numerator lies in `[a + s, a + s + 1)`, and no multiple
/// of `c` can fall strictly inside that window, so the floor is `⌊(a + s)/c⌋`.
fn floor_parts(a: &BigInt, b: &BigInt, c: &BigInt, d: u64) -> BigInt {
    if let (Some(a), Some(b), Some(c)) = (a.to_i64(), b.to_i64(), c.to_i64()) {
        let mag = (b.unsigned_abs() as u128).checked_mul(b.unsigned_abs() as u128);
        if let Some(b2d) = mag.and_then(|m| m.checked_mul(d as u128)) {
            let r = isqrt_u128(b2d) as i128;
            let s = if b >= 0 {
                r
            } else if r * r == b2d as i128 {
                -r
            } else {
                -r - 1
            };
            return BigInt::from(Integer::div_floor(&(a as i128 + s), &(c as i128)));
        }
    }
    let b2d: BigUint = (b * b * BigInt::from(d))
        .to_biguint()
        .expect("square is non-negative");
    let s = if !b.is_negative() {
        BigInt::from(isqrt(&b2d))
    } else {
        match exact_sqrt(&b2d) {
            Some(r) => -BigInt::from(r),
            None => -BigInt::from(isqrt(&b2d)) - 1,
        }
    };
    (a + s).div_floor(c)
}

impl QuadValue {
    /// Builds `(a + b√d)/c`, normalizing the representation.
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: u64) -> Result<Self, QuadError> {
        if c.is_zero() {
            return Err(QuadError::ZeroDenominator);
        }
        check_radicand(d)?;
        Ok(Self::normalized(a, b, c, d))
    }

    pub fn from_integer(n: impl Into<BigInt>, d: u64) -> Self {
        Self {
            a: n.into(),
            b: BigInt::zero(),
            c: BigInt::one(),
            d,
        }
    }

    pub fn zero(d: u64) -> Self {
        Self::from_integer(0, d)
    }

    pub fn one(d: u64) -> Self {
        Self::from_integer(1, d)
    }

    // Caller guarantees c != 0 and a valid radicand.
    pub(crate) fn normalized(mut a: BigInt, mut b: BigInt, mut c: BigInt, d: u64) -> Self {
        debug_assert!(!c.is_zero());
        if c.is_negative() {
            a = -a;
            b = -b;
            c = -c;
        }
        if let (Some(x), Some(y), Some(z)) = (a.to_i64(), b.to_i64(), c.to_i64()) {
            let g = x.gcd(&y).gcd(&z);
            if g > 1 {
                a = BigInt::from(x / g);
                b = BigInt::from(y / g);
                c = BigInt::from(z / g);
            }
        } else {
            let g = a.gcd(&b).gcd(&c);
            if !g.is_one() {
                a /= &g;
                b /= &g;
                c /= &g;
            }
        }
        Self { a, b, c, d }
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Exact sign, decided by integer arithmetic alone.
    pub fn sign(&self) -> Sign {
        if let (Some(a), Some(b)) = (self.a.to_i64(), self.b.to_i64()) {
            if let Some(s) = sign_small(a as i128, b as i128, self.d) {
                return s;
            }
        }
        sign_big(&self.a, &self.b, self.d)
    }

    /// Total order on real values over a shared radicand.
    pub fn compare(&self, other: &Self) -> Result<Ordering, QuadError> {
        if self.d != other.d {
            return Err(QuadError::MixedRadicand(self.d, other.d));
        }
        Ok(self.cmp_same_field(other))
    }

    // Sign of x - y = ((x.a y.c - y.a x.c) + (x.b y.c - y.b x.c)√d) / (x.c y.c).
    fn cmp_same_field(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        let small = (
            self.a.to_i64(),
            self.b.to_i64(),
            self.c.to_i64(),
            other.a.to_i64(),
            other.b.to_i64(),
            other.c.to_i64(),
        );
        if let (Some(xa), Some(xb), Some(xc), Some(ya), Some(yb), Some(yc)) = small {
            let (xa, xb, xc, ya, yb, yc) = (
                xa as i128, xb as i128, xc as i128, ya as i128, yb as i128, yc as i128,
            );
            let (da, db) = if xc == yc {
                (xa - ya, xb - yb)
            } else {
                (xa * yc - ya * xc, xb * yc - yb * xc)
            };
            if let Some(s) = sign_small(da, db, self.d) {
                return s.to_ordering();
            }
        }
        let da = &self.a * &other.c - &other.a * &self.c;
        let db = &self.b * &other.c - &other.b * &self.c;
        sign_big(&da, &db, self.d).to_ordering()
    }

    fn assert_same_field(&self, other: &Self) {
        assert_eq!(
            self.d, other.d,
            "arithmetic between values over different radicands"
        );
    }

    /// `⌊value⌋`.
    pub fn floor(&self) -> BigInt {
        floor_parts(&self.a, &self.b, &self.c, self.d)
    }

    /// `value - ⌊value⌋`, the position on the unit circle.
    pub fn fract(&self) -> QuadValue {
        let f = self.floor();
        Self::normalized(&self.a - f * &self.c, self.b.clone(), self.c.clone(), self.d)
    }

    /// Multiplies by the rational `num / den`.
    pub fn scale(&self, num: &BigInt, den: &BigInt) -> QuadValue {
        assert!(!den.is_zero(), "scale by a zero denominator");
        Self::normalized(&self.a * num, &self.b * num, &self.c * den, self.d)
    }

    /// `1 / value` via the conjugate; panics on zero.
    pub fn recip(&self) -> QuadValue {
        assert!(!self.is_zero(), "reciprocal of zero");
        // c / (a + b√d) = c (a - b√d) / (a² - b² d)
        let norm = &self.a * &self.a - &self.b * &self.b * BigInt::from(self.d);
        Self::normalized(&self.c * &self.a, -(&self.c * &self.b), norm, self.d)
    }

    /// Decimal rendering with exactly `sig` significant digits, rounded half up
    /// on the magnitude. Computed from the exact value; no floating point.
    pub fn to_decimal(&self, sig: usize) -> String {
        assert!(sig >= 1);
        if self.is_zero() {
            return "0".to_string();
        }
        let negative = self.sign() == Sign::Negative;
        let mag = if negative { -self } else { self.clone() };
        let ten = BigInt::from(10);
        let pow10 = |e: i64| -> QuadValue {
            let p = num_traits::pow(ten.clone(), e.unsigned_abs() as usize);
            if e >= 0 {
                QuadValue::from_integer(p, mag.d)
            } else {
                QuadValue::normalized(BigInt::one(), BigInt::zero(), p, mag.d)
            }
        };
        // 10^e ≤ mag < 10^(e+1)
        let mut e: i64 = 0;
        while mag.cmp_same_field(&pow10(e + 1)) != Ordering::Less {
            e += 1;
        }
        while mag.cmp_same_field(&pow10(e)) == Ordering::Less {
            e -= 1;
        }
        let shift = sig as i64 - 1 - e;
        let factor = num_traits::pow(ten.clone(), shift.unsigned_abs() as usize);
        let scaled = if shift >= 0 {
            mag.scale(&factor, &BigInt::one())
        } else {
            mag.scale(&BigInt::one(), &factor)
        };
        let half = QuadValue::normalized(BigInt::one(), BigInt::zero(), BigInt::from(2), mag.d);
        let mut digits = (&scaled + &half).floor().to_string();
        if digits.len() > sig {
            // rounding carried into a new leading digit
            e += 1;
            digits.truncate(sig);
        }
        let mut out = String::new();
        if negative {
            out.push('-');
        }
        if e < 0 {
            out.push_str("0.");
            out.extend(std::iter::repeat_n('0', (-e - 1) as usize));
            out.push_str(&digits);
        } else if (e as usize) < sig - 1 {
            let (int, frac) = digits.split_at(e as usize + 1);
            out.push_str(int);
            out.push('.');
            out.push_str(frac);
        } else {
            out.push_str(&digits);
            out.extend(std::iter::repeat_n('0', e as usize + 1 - sig));
        }
        out
    }

    /// Display-only approximation, parsed from the exact decimal expansion.
    pub fn to_f64(&self) -> f64 {
        self.to_decimal(17).parse().expect("decimal rendering parses")
    }
}

/// Exact sign of a value.
pub fn sign(v: &QuadValue) -> Sign {
    v.sign()
}

/// Ordering of two values over the same radicand.
pub fn compare(x: &QuadValue, y: &QuadValue) -> Result<Ordering, QuadError> {
    x.compare(y)
}

// Values over a common radicand order by real value; values over different
// radicands order by radicand first so the order stays total and consistent
// with structural equality.
impl Ord for QuadValue {
    fn cmp(&self, other: &Self) -> Ordering {
        self.d
            .cmp(&other.d)
            .then_with(|| self.cmp_same_field(other))
    }
}

impl PartialOrd for QuadValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &QuadValue {
    type Output = QuadValue;

    fn add(self, rhs: &QuadValue) -> QuadValue {
        self.assert_same_field(rhs);
        if self.c == rhs.c {
            return QuadValue::normalized(&self.a + &rhs.a, &self.b + &rhs.b, self.c.clone(), self.d);
        }
        QuadValue::normalized(
            &self.a * &rhs.c + &rhs.a * &self.c,
            &self.b * &rhs.c + &rhs.b * &self.c,
            &self.c * &rhs.c,
            self.d,
        )
    }
}

impl Sub for &QuadValue {
    type Output = QuadValue;

    fn sub(self, rhs: &QuadValue) -> QuadValue {
        self.assert_same_field(rhs);
        if self.c == rhs.c {
            return QuadValue::normalized(&self.a - &rhs.a, &self.b - &rhs.b, self.c.clone(), self.d);
        }
        QuadValue::normalized(
            &self.a * &rhs.c - &rhs.a * &self.c,
            &self.b * &rhs.c - &rhs.b * &self.c,
            &self.c * &rhs.c,
            self.d,
        )
    }
}

impl Neg for &QuadValue {
    type Output = QuadValue;

    fn neg(self) -> QuadValue {
        QuadValue {
            a: -&self.a,
            b: -&self.b,
            c: self.c.clone(),
            d: self.d,
        }
    }
}

impl fmt::Display for QuadValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = if self.b.is_negative() { '-' } else { '+' };
        write!(f, "({} {} {}√{})/{}", self.a, op, self.b.abs(), self.d, self.c)
    }
}

impl fmt::Debug for QuadValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadValue{self}")
    }
}

/// The rotation angle: a quadratic irrational `(a + b√d)/c` with `b ≠ 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Alpha {
    value: QuadValue,
}

impl Alpha {
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: u64) -> Result<Self, QuadError> {
        if c.is_zero() {
            return Err(QuadError::ZeroDenominator);
        }
        if b.is_zero() {
            return Err(QuadError::RationalAlpha);
        }
        check_radicand(d)?;
        Ok(Self {
            value: QuadValue::normalized(a, b, c, d),
        })
    }

    /// `√d`.
    pub fn sqrt(d: u64) -> Result<Self, QuadError> {
        Self::new(BigInt::zero(), BigInt::one(), BigInt::one(), d)
    }

    /// The golden ratio `(1 + √5)/2`.
    pub fn golden() -> Self {
        Self::new(BigInt::one(), BigInt::one(), BigInt::from(2), 5).expect("valid constant")
    }

    pub fn a(&self) -> &BigInt {
        self.value.a()
    }

    pub fn b(&self) -> &BigInt {
        self.value.b()
    }

    pub fn c(&self) -> &BigInt {
        self.value.c()
    }

    pub fn d(&self) -> u64 {
        self.value.d()
    }

    pub fn value(&self) -> &QuadValue {
        &self.value
    }

    /// Canonical spec string; `parse_alpha` maps it back to `self`.
    pub fn spec(&self) -> String {
        let (a, b, c) = (self.a(), self.b(), self.c());
        if a.is_zero() && b.is_one() && c.is_one() {
            format!("sqrt:{}", self.d())
        } else if *self == Self::golden() {
            "golden".to_string()
        } else {
            format!("quad:{a}:{b}:{c}:{}", self.d())
        }
    }

    fn scaled_by(&self, m: u64) -> (BigInt, BigInt) {
        let m = BigInt::from(m);
        (self.a() * &m, self.b() * m)
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}

impl fmt::Debug for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alpha{}", self.value)
    }
}

impl FromStr for Alpha {
    type Err = QuadError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_alpha(s)
    }
}

/// Parses `sqrt:<d>`, `quad:<a>:<b>:<c>:<d>` or `golden`.
pub fn parse_alpha(spec: &str) -> Result<Alpha, QuadError> {
    let malformed = || QuadError::MalformedSpec(spec.to_string());
    let radicand = |s: &str| s.trim().parse::<u64>().map_err(|_| malformed());
    let integer = |s: &str| s.trim().parse::<BigInt>().map_err(|_| malformed());
    let parts: Vec<&str> = spec.trim().split(':').collect();
    match parts.as_slice() {
        ["golden"] => Ok(Alpha::golden()),
        ["sqrt", d] => Alpha::sqrt(radicand(d)?),
        ["quad", a, b, c, d] => Alpha::new(integer(a)?, integer(b)?, integer(c)?, radicand(d)?),
        _ => Err(malformed()),
    }
}

/// `⌊m·α⌋`, confirmed by exact sign checks on both sides.
pub fn floor_mult(alpha: &Alpha, m: u64) -> BigInt {
    let (ma, mb) = alpha.scaled_by(m);
    let f = floor_parts(&ma, &mb, alpha.c(), alpha.d());
    let c = alpha.c();
    let low = &ma - &f * c;
    assert!(
        sign_big(&low, &mb, alpha.d()) != Sign::Negative
            && sign_big(&(low - c), &mb, alpha.d()) == Sign::Negative,
        "floor of {m}·α failed its sign check"
    );
    f
}

/// `{m·α}`, the fractional part of `m·α`, in `[0, 1)`.
pub fn frac_mult(alpha: &Alpha, m: u64) -> QuadValue {
    let (ma, mb) = alpha.scaled_by(m);
    let c = alpha.c();
    let f = floor_parts(&ma, &mb, c, alpha.d());
    let r = QuadValue::normalized(ma - f * c, mb, c.clone(), alpha.d());
    debug_assert!(r.sign() != Sign::Negative);
    debug_assert!(r.cmp_same_field(&QuadValue::one(alpha.d())) == Ordering::Less);
    r
}

/// The first `count` partial quotients of α by exact floor-and-invert.
pub fn cf_expansion(alpha: &Alpha, count: usize) -> Vec<BigInt> {
    let mut x = alpha.value().clone();
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let q = x.floor();
        if i + 1 < count {
            // never zero: α is irrational
            x = (&x - &QuadValue::from_integer(q.clone(), x.d)).recip();
        }
        out.push(q);
    }
    out
}

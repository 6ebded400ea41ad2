//! Exact scalars: rationals and elements of cyclotomic fields Q(w).
//!
//! A cyclotomic element is stored as a residue modulo the cyclotomic
//! polynomial of its order. Elements that happen to be rational are always
//! stored as [`Scalar::Rational`], so structural equality is field equality.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Errors raised by scalar arithmetic and parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldDesc, FieldDesc),
    #[error("syntax error in scalar {text:?} at byte {pos}: {msg}")]
    SyntaxError { text: String, pos: usize, msg: String },
    #[error("exponent out of range in {0:?}")]
    ExponentOutOfRange(String),
}

/// The coefficient field of an algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldDesc {
    Rational,
    Cyclotomic { order: u32 },
}

impl fmt::Display for FieldDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDesc::Rational => write!(f, "Q"),
            FieldDesc::Cyclotomic { order } => write!(f, "Q(w{order})"),
        }
    }
}

impl FieldDesc {
    /// Whether scalars of field `other` may be used inside this field.
    pub fn admits(&self, other: FieldDesc) -> bool {
        other == FieldDesc::Rational || *self == other
    }
}

/// Exact field operations used by every algebraic layer.
///
/// The algebra code is generic over this trait; it is implemented for
/// [`BigRational`] and for [`Scalar`].
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// Embeds a rational number.
    fn from_rational(q: BigRational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// Returns the value as a rational number when it lies in Q.
    fn to_rational(&self) -> Option<BigRational>;
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_rational(q: BigRational) -> Self {
        q
    }

    fn to_rational(&self) -> Option<BigRational> {
        Some(self.clone())
    }
}

type Poly = Arc<Vec<BigInt>>;

fn phi_cache() -> &'static RwLock<HashMap<u32, Poly>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Poly>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
///
/// Computed by exact division of `x^n - 1` by the cyclotomic polynomials of
/// the proper divisors of `n`.
///
/// # Panics
/// Panics if `n == 0`.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    cached_phi(n).as_ref().clone()
}

fn cached_phi(n: u32) -> Poly {
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    if let Some(p) = phi_cache().read().expect("phi cache poisoned").get(&n) {
        return p.clone();
    }
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            let divisor = cached_phi(d);
            num = poly_exact_div(&num, &divisor);
        }
    }
    let p = Arc::new(num);
    phi_cache()
        .write()
        .expect("phi cache poisoned")
        .insert(n, p.clone());
    p
}

/// Division of integer polynomials by a monic divisor with zero remainder.
fn poly_exact_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quot = vec![BigInt::zero(); qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[k + j] -= &c * dj;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

fn euler_phi(n: u32) -> usize {
    cached_phi(n).len() - 1
}

/// An element of Q(w), w a primitive `order`-th root of unity, with at least
/// one nonzero non-constant coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Coefficients of 1, w, ..., w^(d-1) where d = deg of the cyclotomic polynomial.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_coeffs(&self.coeffs))
    }
}

/// An exact scalar: a rational number or a non-rational cyclotomic element.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Cyclotomic(Cyclotomic),
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Scalar {
    pub fn rational(num: i64, den: i64) -> Scalar {
        Scalar::Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn int(n: i64) -> Scalar {
        Scalar::Rational(rat(n))
    }

    /// `w^k` in Q(w), w a primitive `order`-th root of unity.
    pub fn root_of_unity(order: u32, k: i64) -> Scalar {
        let e = k.rem_euclid(order as i64) as usize;
        let mut poly = vec![BigRational::zero(); e + 1];
        poly[e] = BigRational::one();
        Scalar::from_poly(order, poly)
    }

    /// Builds the residue of an arbitrary polynomial in w.
    pub fn from_poly(order: u32, mut poly: Vec<BigRational>) -> Scalar {
        let phi = cached_phi(order);
        let d = phi.len() - 1;
        for k in (d..poly.len()).rev() {
            let c = std::mem::take(&mut poly[k]);
            if c.is_zero() {
                continue;
            }
            for (j, pj) in phi.iter().take(d).enumerate() {
                if !pj.is_zero() {
                    poly[k - d + j] -= &c * BigRational::from_integer(pj.clone());
                }
            }
        }
        poly.resize(d, BigRational::zero());
        Scalar::normalize(order, poly)
    }

    fn normalize(order: u32, coeffs: Vec<BigRational>) -> Scalar {
        if coeffs.iter().skip(1).all(Zero::is_zero) {
            Scalar::Rational(coeffs.into_iter().next().unwrap_or_else(BigRational::zero))
        } else {
            Scalar::Cyclotomic(Cyclotomic { order, coeffs })
        }
    }

    /// The smallest field containing this value.
    pub fn field(&self) -> FieldDesc {
        match self {
            Scalar::Rational(_) => FieldDesc::Rational,
            Scalar::Cyclotomic(c) => FieldDesc::Cyclotomic { order: c.order },
        }
    }

    fn coeff_vec(&self, d: usize) -> Vec<BigRational> {
        match self {
            Scalar::Rational(q) => {
                let mut v = vec![BigRational::zero(); d.max(1)];
                v[0] = q.clone();
                v
            }
            Scalar::Cyclotomic(c) => c.coeffs.clone(),
        }
    }

    fn common_order(&self, other: &Scalar) -> Result<Option<u32>, ScalarError> {
        match (self, other) {
            (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b)) if a.order != b.order => Err(
                ScalarError::FieldMismatch(self.field(), other.field()),
            ),
            (Scalar::Cyclotomic(a), _) => Ok(Some(a.order)),
            (_, Scalar::Cyclotomic(b)) => Ok(Some(b.order)),
            _ => Ok(None),
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        match self.common_order(other)? {
            None => Ok(Scalar::Rational(self.as_q() + other.as_q())),
            Some(n) => {
                let d = euler_phi(n);
                let mut a = self.coeff_vec(d);
                for (x, y) in a.iter_mut().zip(other.coeff_vec(d)) {
                    *x += y;
                }
                Ok(Scalar::normalize(n, a))
            }
        }
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.try_add(&-other.clone())
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a * b)),
            (Scalar::Rational(q), Scalar::Cyclotomic(c))
            | (Scalar::Cyclotomic(c), Scalar::Rational(q)) => {
                if q.is_zero() {
                    return Ok(Scalar::Rational(BigRational::zero()));
                }
                Ok(Scalar::Cyclotomic(Cyclotomic {
                    order: c.order,
                    coeffs: c.coeffs.iter().map(|x| x * q).collect(),
                }))
            }
            (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b)) => {
                if a.order != b.order {
                    return Err(ScalarError::FieldMismatch(self.field(), other.field()));
                }
                let mut prod = vec![BigRational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
                for (i, x) in a.coeffs.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (j, y) in b.coeffs.iter().enumerate() {
                        if !y.is_zero() {
                            prod[i + j] += x * y;
                        }
                    }
                }
                Ok(Scalar::from_poly(a.order, prod))
            }
        }
    }

    pub fn try_inv(&self) -> Result<Scalar, ScalarError> {
        match self {
            Scalar::Rational(q) => {
                if q.is_zero() {
                    Err(ScalarError::DivisionByZero)
                } else {
                    Ok(Scalar::Rational(q.recip()))
                }
            }
            Scalar::Cyclotomic(c) => Ok(cyclotomic_inverse(c)),
        }
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.try_mul(&other.try_inv()?)
    }

    fn as_q(&self) -> BigRational {
        match self {
            Scalar::Rational(q) => q.clone(),
            Scalar::Cyclotomic(_) => unreachable!("rational expected"),
        }
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..e {
            acc = acc * self;
        }
        acc
    }

    /// Canonical text form, accepted back by [`Scalar::parse`].
    pub fn render(&self) -> String {
        match self {
            Scalar::Rational(q) => render_rational(q),
            Scalar::Cyclotomic(c) => render_coeffs(&c.coeffs),
        }
    }

    /// Parses the scalar grammar `term (('+'|'-') term)*` in the given field.
    pub fn parse(text: &str, field: FieldDesc) -> Result<Scalar, ScalarError> {
        Parser { text, bytes: text.as_bytes(), pos: 0, field }.scalar()
    }
}

/// Inverse of a cyclotomic element by solving `a * x = 1` in the power basis.
fn cyclotomic_inverse(c: &Cyclotomic) -> Scalar {
    let d = c.coeffs.len();
    let a = Scalar::Cyclotomic(c.clone());
    // Column j holds the coefficients of a * w^j.
    let mut m: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); d + 1]; d];
    for j in 0..d {
        let col = (a.clone() * &Scalar::root_of_unity(c.order, j as i64)).coeff_vec(d);
        for (i, v) in col.into_iter().enumerate() {
            m[i][j] = v;
        }
    }
    m[0][d] = BigRational::one();
    for col in 0..d {
        let piv = (col..d)
            .find(|&r| !m[r][col].is_zero())
            .expect("nonzero cyclotomic element is invertible");
        m.swap(col, piv);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..d {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let pivot_row = m[col].clone();
                for (x, p) in m[r].iter_mut().zip(pivot_row.iter()) {
                    *x -= &f * p;
                }
            }
        }
    }
    Scalar::normalize(c.order, m.into_iter().map(|row| row[d].clone()).collect())
}

fn render_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn render_coeffs(coeffs: &[BigRational]) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        let monomial = match k {
            0 => String::new(),
            1 => "w".to_string(),
            _ => format!("w^{k}"),
        };
        if k == 0 {
            out.push_str(&render_rational(&mag));
        } else if mag.is_one() {
            out.push_str(&monomial);
        } else {
            out.push_str(&render_rational(&mag));
            out.push('*');
            out.push_str(&monomial);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

struct Parser<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
    field: FieldDesc,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> ScalarError {
        ScalarError::SyntaxError { text: self.text.to_string(), pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.text[start..self.pos].to_string())
    }

    fn scalar(mut self) -> Result<Scalar, ScalarError> {
        let mut acc = Scalar::zero();
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            None => return Err(self.err("empty scalar")),
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign < 0 { acc - t } else { acc + &t };
            match self.peek() {
                None => return Ok(acc),
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                Some(_) => return Err(self.err("expected '+' or '-'")),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Scalar, ScalarError> {
        if self.peek() == Some(b'w') {
            return self.monomial();
        }
        let num = self.digits().ok_or_else(|| self.err("expected integer or 'w'"))?;
        let num: BigInt = num.parse().map_err(|_| self.err("bad integer"))?;
        let mut q = BigRational::from_integer(num);
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let den = self.digits().ok_or_else(|| self.err("expected denominator"))?;
            let den: BigInt = den.parse().map_err(|_| self.err("bad denominator"))?;
            if den.is_zero() {
                return Err(ScalarError::DivisionByZero);
            }
            q = BigRational::new(q.to_integer(), den);
        }
        let coeff = Scalar::Rational(q);
        if self.peek() == Some(b'*') {
            self.pos += 1;
            if self.peek() != Some(b'w') {
                return Err(self.err("expected 'w' after '*'"));
            }
            let m = self.monomial()?;
            return Ok(coeff * &m);
        }
        Ok(coeff)
    }

    fn monomial(&mut self) -> Result<Scalar, ScalarError> {
        self.pos += 1; // 'w'
        let order = match self.field {
            FieldDesc::Cyclotomic { order } => order,
            FieldDesc::Rational => {
                return Err(ScalarError::FieldMismatch(
                    FieldDesc::Rational,
                    FieldDesc::Cyclotomic { order: 0 },
                ))
            }
        };
        let mut exp: i64 = 1;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let neg = if self.peek() == Some(b'-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let text = self.digits().ok_or_else(|| self.err("expected exponent"))?;
            let big: BigInt = text.parse().map_err(|_| self.err("bad exponent"))?;
            let reduced = big.mod_floor(&BigInt::from(order));
            let reduced = reduced
                .to_i64()
                .ok_or_else(|| ScalarError::ExponentOutOfRange(self.text.to_string()))?;
            exp = if neg { -reduced } else { reduced };
        }
        Ok(Scalar::root_of_unity(order, exp))
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::Rational(BigRational::zero())
    }

    fn is_zero(&self) -> bool {
        matches!(self, Scalar::Rational(q) if q.is_zero())
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::Rational(BigRational::one())
    }
}

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Cyclotomic(c) => Scalar::Cyclotomic(Cyclotomic {
                order: c.order,
                coeffs: c.coeffs.into_iter().map(|x| -x).collect(),
            }),
        }
    }
}

// Mixed-order arithmetic through the operator traits is a programming error;
// the `try_*` methods report it as a `FieldMismatch` instead.
macro_rules! scalar_binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$try(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$try(&rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

scalar_binop!(Add, add, try_add);
scalar_binop!(Sub, sub, try_sub);
scalar_binop!(Mul, mul, try_mul);
scalar_binop!(Div, div, try_div);

impl Field for Scalar {
    fn inv(&self) -> Option<Self> {
        self.try_inv().ok()
    }

    fn from_rational(q: BigRational) -> Self {
        Scalar::Rational(q)
    }

    fn to_rational(&self) -> Option<BigRational> {
        match self {
            Scalar::Rational(q) => Some(q.clone()),
            Scalar::Cyclotomic(_) => None,
        }
    }
}

/// Exact n-th root test for rationals: returns `r` with `r^n = q` if it exists.
pub fn rational_nth_root(q: &BigRational, n: u32) -> Option<BigRational> {
    if q.is_zero() {
        return Some(BigRational::zero());
    }
    if q.is_negative() && n.is_multiple_of(2) {
        return None;
    }
    let root = |x: &BigInt| -> Option<BigInt> {
        let r = x.abs().nth_root(n);
        (r.pow(n) == x.abs()).then_some(if x.is_negative() { -r } else { r })
    };
    Some(BigRational::new(root(q.numer())?, root(q.denom())?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: u32, s: &str) -> Scalar {
        Scalar::parse(s, FieldDesc::Cyclotomic { order: n }).unwrap()
    }

    #[test]
    fn rational_addition() {
        assert_eq!(Scalar::rational(1, 2) + Scalar::rational(1, 3), Scalar::rational(5, 6));
    }

    #[test]
    fn fourth_root_squares_to_minus_one() {
        let w = Scalar::root_of_unity(4, 1);
        assert_eq!(w.clone() * &w, Scalar::int(-1));
    }

    #[test]
    fn cube_roots_sum() {
        let w = Scalar::root_of_unity(3, 1);
        let w2 = Scalar::root_of_unity(3, 2);
        assert_eq!(w2 + &w, Scalar::int(-1));
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        let ints = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
    }

    #[test]
    fn parse_examples() {
        assert_eq!(Scalar::parse("3/2", FieldDesc::Rational).unwrap(), Scalar::rational(3, 2));
        let v = cyc(5, "w^2-1/3*w");
        match &v {
            Scalar::Cyclotomic(c) => {
                let expect: Vec<BigRational> = vec![
                    BigRational::zero(),
                    BigRational::new((-1).into(), 3.into()),
                    BigRational::one(),
                    BigRational::zero(),
                ];
                assert_eq!(c.coeffs(), expect.as_slice());
            }
            _ => panic!("expected cyclotomic"),
        }
        assert_eq!(cyc(4, "w^4"), Scalar::one());
        assert_eq!(cyc(4, "w^-1"), cyc(4, "w^3"));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Scalar::parse("1/", FieldDesc::Rational),
            Err(ScalarError::SyntaxError { .. })
        ));
        assert!(matches!(Scalar::parse("", FieldDesc::Rational), Err(ScalarError::SyntaxError { .. })));
        assert!(matches!(Scalar::parse("w", FieldDesc::Rational), Err(ScalarError::FieldMismatch(..))));
        assert!(matches!(Scalar::parse("1/0", FieldDesc::Rational), Err(ScalarError::DivisionByZero)));
        assert!(Scalar::parse("w^99999999999999999999999", FieldDesc::Cyclotomic { order: 3 }).is_ok());
    }

    #[test]
    fn mixed_orders_rejected() {
        let a = Scalar::root_of_unity(3, 1);
        let b = Scalar::root_of_unity(5, 1);
        assert!(matches!(a.try_add(&b), Err(ScalarError::FieldMismatch(..))));
        assert!(matches!(a.try_mul(&b), Err(ScalarError::FieldMismatch(..))));
        assert!(a.try_add(&Scalar::int(2)).is_ok());
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert_eq!(Scalar::zero().try_inv(), Err(ScalarError::DivisionByZero));
        assert_eq!(Field::inv(&BigRational::zero()), None);
    }

    #[test]
    fn roots_have_exact_order() {
        for n in 1..=24u32 {
            let w = Scalar::root_of_unity(n, 1);
            assert_eq!(w.pow(n), Scalar::one(), "w^{n}");
            for d in 1..n {
                if n % d == 0 {
                    assert_ne!(w.pow(d), Scalar::one(), "order {n}, divisor {d}");
                }
            }
        }
    }

    #[test]
    fn nth_roots() {
        let q = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        assert_eq!(rational_nth_root(&q(8, 27), 3), Some(q(2, 3)));
        assert_eq!(rational_nth_root(&q(-8, 1), 3), Some(q(-2, 1)));
        assert_eq!(rational_nth_root(&q(2, 1), 2), None);
        assert_eq!(rational_nth_root(&q(-4, 1), 2), None);
    }
}

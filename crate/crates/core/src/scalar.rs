//! Exact scalar fields.
//!
//! Everything in the crate is generic over [`Field`]. Two backends are
//! provided: arbitrary-precision rationals ([`Rational`]) and rational
//! functions in one indeterminate `q` over the rationals ([`RatFunc`]).

use std::fmt::{self, Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ScalarError {
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
    #[error("parameter q = {0} is excluded (q must not be 0 or a root of unity)")]
    ForbiddenParameter(String),
}

/// Which backend a serialized algebra was written with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScalarKind {
    Rational,
    Ratfunc,
}

/// An exact field. Arithmetic never rounds.
///
/// `inv` panics on zero; callers check `is_zero` first.
pub trait Field: Clone + PartialEq + Eq + Hash + Debug + Display + Send + Sync + 'static {
    const KIND: ScalarKind;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Self;
    fn parse_scalar(s: &str) -> Result<Self, ScalarError>;

    fn characteristic() -> u64 {
        0
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn div(&self, rhs: &Self) -> Self {
        self.mul(&rhs.inv())
    }

    fn add_assign(&mut self, rhs: &Self) {
        *self = self.add(rhs);
    }

    fn sub_assign(&mut self, rhs: &Self) {
        *self = self.sub(rhs);
    }

    fn mul_assign(&mut self, rhs: &Self) {
        *self = self.mul(rhs);
    }

    /// `self -= a * b`, the inner step of every elimination loop.
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        if !a.is_zero() && !b.is_zero() {
            *self = self.sub(&a.mul(b));
        }
    }

    /// Integer power; negative exponents invert.
    fn pow(&self, exp: i64) -> Self {
        let base = if exp < 0 { self.inv() } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        acc
    }
}

/// Rejects the excluded parameter values 0, 1, -1.
///
/// Over the rationals these are exactly zero and the roots of unity; a
/// non-constant rational function is never a root of unity, so the same test
/// serves both backends.
pub fn check_parameter<F: Field>(q: &F) -> Result<(), ScalarError> {
    if q.is_zero() || q.is_one() || q.neg().is_one() {
        return Err(ScalarError::ForbiddenParameter(q.to_string()));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Rationals

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(pub BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }
}

impl Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Display::fmt(self, f)
    }
}

impl Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

fn parse_bigint(s: &str) -> Option<BigInt> {
    let s = s.trim();
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.trim_start_matches('+').parse().ok()
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n = parse_bigint(n)?;
            let d = parse_bigint(d)?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => Some(BigRational::from_integer(parse_bigint(s)?)),
    }
}

impl Field for Rational {
    const KIND: ScalarKind = ScalarKind::Rational;

    fn zero() -> Self {
        Rational(BigRational::zero())
    }
    fn one() -> Self {
        Rational(BigRational::one())
    }
    fn from_i64(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn is_one(&self) -> bool {
        self.0.is_one()
    }
    fn add(&self, rhs: &Self) -> Self {
        Rational(&self.0 + &rhs.0)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Rational(&self.0 - &rhs.0)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Rational(&self.0 * &rhs.0)
    }
    fn neg(&self) -> Self {
        Rational(-&self.0)
    }
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        Rational(self.0.recip())
    }
    fn add_assign(&mut self, rhs: &Self) {
        self.0 += &rhs.0;
    }
    fn sub_assign(&mut self, rhs: &Self) {
        self.0 -= &rhs.0;
    }
    fn mul_assign(&mut self, rhs: &Self) {
        self.0 *= &rhs.0;
    }
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.0.is_zero() || b.0.is_zero() {
            return;
        }
        if a.0.is_integer() && b.0.is_integer() && self.0.is_integer() {
            let v = self.0.numer() - a.0.numer() * b.0.numer();
            self.0 = BigRational::from_integer(v);
        } else {
            self.0 -= &a.0 * &b.0;
        }
    }
    fn parse_scalar(s: &str) -> Result<Self, ScalarError> {
        parse_rational(s)
            .map(Rational)
            .ok_or_else(|| ScalarError::Parse(s.to_string()))
    }
}

// ---------------------------------------------------------------------------
// Univariate polynomials and rational functions over Q

/// Dense polynomial in `q`, coefficients from low to high degree, no
/// trailing zeros. The zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly(Vec<BigRational>);

impl Poly {
    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = Poly(vec![c]);
        p.trim();
        p
    }

    pub fn monomial(c: BigRational, deg: usize) -> Self {
        let mut v = vec![BigRational::zero(); deg + 1];
        v[deg] = c;
        let mut p = Poly(v);
        p.trim();
        p
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.0
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn lead(&self) -> Option<&BigRational> {
        self.0.last()
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.0.get(i);
            let b = o.0.get(i);
            v.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        let mut p = Poly(v);
        p.trim();
        p
    }

    pub fn neg(&self) -> Poly {
        Poly(self.0.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![BigRational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        let mut p = Poly(v);
        p.trim();
        p
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        let mut p = Poly(self.0.iter().map(|a| a * c).collect());
        p.trim();
        p
    }

    /// Quotient and remainder; `d` must be nonzero.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dl = d.lead().expect("division by zero polynomial").clone();
        let dd = d.0.len() - 1;
        let mut r = self.0.clone();
        if r.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); r.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &r[k + dd] / &dl;
            if !c.is_zero() {
                for (i, di) in d.0.iter().enumerate() {
                    r[k + i] -= &c * di;
                }
            }
            quot[k] = c;
        }
        r.truncate(dd);
        let mut q = Poly(quot);
        q.trim();
        let mut rem = Poly(r);
        rem.trim();
        (q, rem)
    }

    pub fn monic(&self) -> Poly {
        match self.lead() {
            None => Poly::zero(),
            Some(l) => {
                let inv = l.recip();
                self.scale(&inv)
            }
        }
    }

    pub fn gcd(&self, o: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    fn parse(s: &str) -> Option<Poly> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return None;
        }
        // split into signed terms
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = s.as_bytes();
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                terms.push(&s[start..i]);
                start = i;
            }
        }
        terms.push(&s[start..]);
        let mut acc = Poly::zero();
        for t in terms {
            acc = acc.add(&Poly::parse_term(t)?);
        }
        Some(acc)
    }

    fn parse_term(t: &str) -> Option<Poly> {
        let (sign, body) = match t.as_bytes().first()? {
            b'-' => (-BigRational::one(), &t[1..]),
            b'+' => (BigRational::one(), &t[1..]),
            _ => (BigRational::one(), t),
        };
        let (coeff, mono) = match body.split_once('*') {
            Some((c, m)) => (parse_rational(c)?, Some(m)),
            None if body.contains('q') => (BigRational::one(), Some(body)),
            None => (parse_rational(body)?, None),
        };
        let deg = match mono {
            None => 0,
            Some("q") => 1,
            Some(m) => m.strip_prefix("q^")?.parse().ok()?,
        };
        Some(Poly::monomial(sign * coeff, deg))
    }
}

impl Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let a = Rational(a);
            match deg {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if deg == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{deg}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Reduced fraction of polynomials in `q` with monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// The indeterminate `q`.
    pub fn q() -> Self {
        RatFunc {
            num: Poly::monomial(BigRational::one(), 1),
            den: Poly::constant(BigRational::one()),
        }
    }

    pub fn from_polys(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (n, _) = num.div_rem(&g);
        let (d, _) = den.div_rem(&g);
        let l = d.lead().unwrap().recip();
        RatFunc {
            num: n.scale(&l),
            den: d.scale(&l),
        }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_constant(&self) -> bool {
        self.num.degree().unwrap_or(0) == 0 && self.den.degree() == Some(0)
    }
}

impl Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Display::fmt(self, f)
    }
}

impl Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Field for RatFunc {
    const KIND: ScalarKind = ScalarKind::Ratfunc;

    fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::constant(BigRational::one()),
        }
    }
    fn one() -> Self {
        Self::from_i64(1)
    }
    fn from_i64(n: i64) -> Self {
        RatFunc {
            num: Poly::constant(BigRational::from_integer(n.into())),
            den: Poly::constant(BigRational::one()),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return Self::from_polys(self.num.add(&rhs.num), self.den.clone());
        }
        Self::from_polys(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        Self::from_polys(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
    fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        Self::from_polys(self.den.clone(), self.num.clone())
    }
    fn parse_scalar(s: &str) -> Result<Self, ScalarError> {
        let err = || ScalarError::Parse(s.to_string());
        let t = s.trim();
        if let Some(rest) = t.strip_prefix('(') {
            let (n, rest) = rest.split_once(')').ok_or_else(err)?;
            let num = Poly::parse(n).ok_or_else(err)?;
            if rest.is_empty() {
                return Ok(Self::from_polys(num, Poly::constant(BigRational::one())));
            }
            let d = rest
                .strip_prefix("/(")
                .and_then(|d| d.strip_suffix(')'))
                .ok_or_else(err)?;
            let den = Poly::parse(d).ok_or_else(err)?;
            if den.is_zero() {
                return Err(err());
            }
            return Ok(Self::from_polys(num, den));
        }
        let num = Poly::parse(t).ok_or_else(err)?;
        Ok(Self::from_polys(num, Poly::constant(BigRational::one())))
    }
}

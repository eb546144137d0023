//! Exact arithmetic in the cyclotomic field Q(g), g a primitive 12th root of unity.
//!
//! Values are stored in the power basis `{1, g, g^2, g^3}`. Every operation
//! reduces by the minimal polynomial `g^4 - g^2 + 1`, so two values are equal
//! exactly when their coefficient vectors are equal.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always stored in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// An element `c0 + c1 g + c2 g^2 + c3 g^3` of Q(g).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloNum {
    coeffs: [Rational; 4],
}

fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rewrites a polynomial in g of any degree into the canonical basis.
fn reduce(mut poly: Vec<Rational>) -> [Rational; 4] {
    // g^d = g^(d-4) * (g^2 - 1)
    for d in (4..poly.len()).rev() {
        let x = std::mem::take(&mut poly[d]);
        if x.is_zero() {
            continue;
        }
        poly[d - 2] += &x;
        poly[d - 4] -= &x;
    }
    poly.resize(4, Rational::zero());
    let mut it = poly.into_iter();
    std::array::from_fn(|_| it.next().unwrap())
}

impl CycloNum {
    pub fn new(coeffs: [Rational; 4]) -> Self {
        CycloNum { coeffs }
    }

    pub fn from_ints(c: [i64; 4]) -> Self {
        CycloNum::new(c.map(rat))
    }

    pub fn zero() -> Self {
        CycloNum::from_ints([0; 4])
    }

    pub fn one() -> Self {
        CycloNum::from_ints([1, 0, 0, 0])
    }

    pub fn from_rational(r: Rational) -> Self {
        CycloNum::new([r, Rational::zero(), Rational::zero(), Rational::zero()])
    }

    pub fn from_int(n: i64) -> Self {
        CycloNum::from_rational(rat(n))
    }

    /// g^k for any integer k (taken mod 12).
    pub fn gamma_pow(k: i64) -> Self {
        let k = k.rem_euclid(12) as usize;
        let mut poly = vec![Rational::zero(); k + 1];
        poly[k] = Rational::one();
        CycloNum::new(reduce(poly))
    }

    pub fn gamma() -> Self {
        CycloNum::gamma_pow(1)
    }

    /// The primitive cube root of unity `g^4`.
    pub fn zeta() -> Self {
        CycloNum::gamma_pow(4)
    }

    /// The imaginary unit `g^3`.
    pub fn i() -> Self {
        CycloNum::gamma_pow(3)
    }

    pub fn coeffs(&self) -> &[Rational; 4] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// Re-applies the reduction. Values built through this API are already canonical.
    pub fn canonicalize(&self) -> Self {
        CycloNum::new(reduce(self.coeffs.to_vec()))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        CycloNum::new(std::array::from_fn(|i| &self.coeffs[i] * r))
    }

    /// Multiplicative inverse, found by solving the 4x4 rational system `self * x = 1`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // column j holds the coefficients of self * g^j
        let cols: Vec<CycloNum> = (0..4)
            .map(|j| self * &CycloNum::gamma_pow(j as i64))
            .collect();
        let mut aug: Vec<Vec<Rational>> = (0..4)
            .map(|row| {
                let mut r: Vec<Rational> = (0..4).map(|j| cols[j].coeffs[row].clone()).collect();
                r.push(if row == 0 { Rational::one() } else { Rational::zero() });
                r
            })
            .collect();
        for col in 0..4 {
            let pivot = (col..4)
                .find(|&r| !aug[r][col].is_zero())
                .ok_or(Error::DivisionByZero)?;
            aug.swap(col, pivot);
            let p = aug[col][col].clone();
            for v in aug[col].iter_mut() {
                *v /= &p;
            }
            for r in 0..4 {
                if r != col && !aug[r][col].is_zero() {
                    let f = aug[r][col].clone();
                    let pivot = aug[col].clone();
                    for (cell, p) in aug[r].iter_mut().zip(&pivot).skip(col) {
                        *cell -= &f * p;
                    }
                }
            }
        }
        Ok(CycloNum::new(std::array::from_fn(|r| aug[r][4].clone())))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = CycloNum::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Complex embedding at g = exp(i*pi/6), as (re, im). Diagnostic only.
    pub fn to_complex_f64(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.coeffs.iter().enumerate() {
            let c = c.to_f64().unwrap_or(f64::NAN);
            let angle = std::f64::consts::PI * k as f64 / 6.0;
            re += c * angle.cos();
            im += c * angle.sin();
        }
        (re, im)
    }
}

impl Default for CycloNum {
    fn default() -> Self {
        CycloNum::zero()
    }
}

impl<'a> Add<&'a CycloNum> for &'a CycloNum {
    type Output = CycloNum;
    fn add(self, rhs: &CycloNum) -> CycloNum {
        CycloNum::new(std::array::from_fn(|i| &self.coeffs[i] + &rhs.coeffs[i]))
    }
}

impl<'a> Sub<&'a CycloNum> for &'a CycloNum {
    type Output = CycloNum;
    fn sub(self, rhs: &CycloNum) -> CycloNum {
        CycloNum::new(std::array::from_fn(|i| &self.coeffs[i] - &rhs.coeffs[i]))
    }
}

impl<'a> Mul<&'a CycloNum> for &'a CycloNum {
    type Output = CycloNum;
    fn mul(self, rhs: &CycloNum) -> CycloNum {
        let mut poly = vec![Rational::zero(); 7];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    poly[i + j] += a * b;
                }
            }
        }
        CycloNum::new(reduce(poly))
    }
}

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        CycloNum::new(std::array::from_fn(|i| -&self.coeffs[i]))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<CycloNum> for CycloNum {
            type Output = CycloNum;
            fn $m(self, rhs: CycloNum) -> CycloNum {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        -&self
    }
}

fn fmt_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

impl fmt::Display for CycloNum {
    /// Renders as `c0 + c1*g + c2*g^2 + c3*g^3` with every coefficient written `p/q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.coeffs;
        write!(
            f,
            "{} + {}*g + {}*g^2 + {}*g^3",
            fmt_rational(&c[0]),
            fmt_rational(&c[1]),
            fmt_rational(&c[2]),
            fmt_rational(&c[3])
        )
    }
}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloNum({self})")
    }
}

/// Parser for sums of terms `[coef][*]g[^k]`, where `coef` is `p` or `p/q`.
///
/// Accepts the rendered form exactly and also looser input such as
/// `g^11 - g^7` or `-1/3*g^2`. Powers of g may be any integer.
struct Parser<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            src,
            chars: src.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
        }
    }

    fn err(&self, reason: &str) -> Error {
        Error::parse(self.src, format!("{reason} (at offset {})", self.pos))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().ok()
    }

    fn signed_int(&mut self) -> Result<i64> {
        let neg = self.eat('-');
        let v = self
            .integer()
            .and_then(|v| v.to_i64())
            .ok_or_else(|| self.err("expected exponent"))?;
        Ok(if neg { -v } else { v })
    }

    fn is_gamma(c: Option<char>) -> bool {
        matches!(c, Some('g') | Some('γ'))
    }

    fn term(&mut self) -> Result<CycloNum> {
        let coef = match self.integer() {
            Some(p) => {
                let q = if self.eat('/') {
                    self.integer().ok_or_else(|| self.err("expected denominator"))?
                } else {
                    BigInt::one()
                };
                if q.is_zero() {
                    return Err(self.err("zero denominator"));
                }
                Some(Rational::new(p, q))
            }
            None => None,
        };
        let has_star = self.eat('*');
        if Self::is_gamma(self.peek()) {
            self.pos += 1;
            let k = if self.eat('^') { self.signed_int()? } else { 1 };
            let g = CycloNum::gamma_pow(k);
            Ok(match coef {
                Some(c) => g.scale(&c),
                None => g,
            })
        } else if has_star {
            Err(self.err("expected `g` after `*`"))
        } else {
            coef.map(CycloNum::from_rational)
                .ok_or_else(|| self.err("expected a coefficient or `g`"))
        }
    }

    fn parse(mut self) -> Result<CycloNum> {
        let mut acc = CycloNum::zero();
        let mut first = true;
        loop {
            let mut neg = false;
            if !first || matches!(self.peek(), Some('+') | Some('-')) {
                match self.peek() {
                    Some('+') => self.pos += 1,
                    Some('-') => {
                        self.pos += 1;
                        neg = true;
                    }
                    _ => return Err(self.err("expected `+` or `-`")),
                }
            }
            // `+ -1/3*g` as rendered by Display
            if self.eat('-') {
                neg = !neg;
            }
            let t = self.term()?;
            acc = if neg { &acc - &t } else { &acc + &t };
            first = false;
            if self.peek().is_none() {
                return Ok(acc);
            }
        }
    }
}

impl FromStr for CycloNum {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Err(Error::parse(s, "empty input"));
        }
        Parser::new(s).parse()
    }
}

impl serde::Serialize for CycloNum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for CycloNum {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

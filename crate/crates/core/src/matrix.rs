//! 2x2 matrices over Q(g).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cyclo::{CycloNum, Rational};
use crate::error::{Error, Result};

/// Row-major 2x2 matrix `[[a, b], [c, d]]`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Mat2 {
    pub a: CycloNum,
    pub b: CycloNum,
    pub c: CycloNum,
    pub d: CycloNum,
}

impl Mat2 {
    pub fn new(a: CycloNum, b: CycloNum, c: CycloNum, d: CycloNum) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn identity() -> Self {
        Mat2::scalar(CycloNum::one())
    }

    pub fn scalar(x: CycloNum) -> Self {
        Mat2::new(x.clone(), CycloNum::zero(), CycloNum::zero(), x)
    }

    pub fn diag(x: CycloNum, y: CycloNum) -> Self {
        Mat2::new(x, CycloNum::zero(), CycloNum::zero(), y)
    }

    pub fn antidiag(x: CycloNum, y: CycloNum) -> Self {
        Mat2::new(CycloNum::zero(), x, y, CycloNum::zero())
    }

    pub fn entries(&self) -> [&CycloNum; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn mul(&self, y: &Mat2) -> Mat2 {
        Mat2::new(
            &(&self.a * &y.a) + &(&self.b * &y.c),
            &(&self.a * &y.b) + &(&self.b * &y.d),
            &(&self.c * &y.a) + &(&self.d * &y.c),
            &(&self.c * &y.b) + &(&self.d * &y.d),
        )
    }

    pub fn det(&self) -> CycloNum {
        &(&self.a * &self.d) - &(&self.b * &self.c)
    }

    pub fn trace(&self) -> CycloNum {
        &self.a + &self.d
    }

    pub fn inv(&self) -> Result<Mat2> {
        let det = self.det();
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let r = det.inv()?;
        Ok(Mat2::new(
            &self.d * &r,
            &(-&self.b) * &r,
            &(-&self.c) * &r,
            &self.a * &r,
        ))
    }

    pub fn sub(&self, y: &Mat2) -> Mat2 {
        Mat2::new(&self.a - &y.a, &self.b - &y.b, &self.c - &y.c, &self.d - &y.d)
    }

    pub fn scale(&self, r: &Rational) -> Mat2 {
        Mat2::new(self.a.scale(r), self.b.scale(r), self.c.scale(r), self.d.scale(r))
    }

    pub fn pow(&self, e: u32) -> Mat2 {
        (0..e).fold(Mat2::identity(), |acc, _| acc.mul(self))
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.d.is_one() && self.b.is_zero() && self.c.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.entries().iter().all(|e| e.is_zero())
    }

    /// `x * self * x^-1`.
    pub fn conjugate_by(&self, x: &Mat2) -> Result<Mat2> {
        Ok(x.mul(self).mul(&x.inv()?))
    }

    /// Spanning vector of `ker(self - lambda I)` when that kernel is a line.
    ///
    /// Returns `None` when `lambda` is not an eigenvalue or when `self = lambda I`
    /// (the kernel is then the whole plane).
    pub fn eigenline(&self, lambda: &CycloNum) -> Option<[CycloNum; 2]> {
        let shifted = self.sub(&Mat2::scalar(lambda.clone()));
        if shifted.is_zero() || !shifted.det().is_zero() {
            return None;
        }
        // v = (M12, lambda - M11), falling back to (lambda - M22, M21)
        let v = [self.b.clone(), lambda - &self.a];
        if !(v[0].is_zero() && v[1].is_zero()) {
            return Some(v);
        }
        Some([lambda - &self.d, self.c.clone()])
    }
}

/// Vanishing 2x2 determinant `u0 v1 - u1 v0`: the two vectors span the same line.
pub fn collinear(u: &[CycloNum; 2], v: &[CycloNum; 2]) -> bool {
    (&(&u[0] * &v[1]) - &(&u[1] * &v[0])).is_zero()
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat2{self}")
    }
}

impl FromStr for Mat2 {
    type Err = Error;

    /// Parses `[[a, b], [c, d]]`; each entry uses the `CycloNum` text format.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = compact
            .strip_prefix("[[")
            .and_then(|t| t.strip_suffix("]]"))
            .ok_or_else(|| Error::parse(s, "expected `[[a, b], [c, d]]`"))?;
        let rows: Vec<&str> = inner.split("],[").collect();
        if rows.len() != 2 {
            return Err(Error::parse(s, "expected two rows"));
        }
        let mut entries = Vec::with_capacity(4);
        for row in rows {
            let cells: Vec<&str> = row.split(',').collect();
            if cells.len() != 2 {
                return Err(Error::parse(s, "expected two entries per row"));
            }
            for cell in cells {
                entries.push(cell.parse::<CycloNum>()?);
            }
        }
        let mut it = entries.into_iter();
        Ok(Mat2::new(
            it.next().unwrap(),
            it.next().unwrap(),
            it.next().unwrap(),
            it.next().unwrap(),
        ))
    }
}

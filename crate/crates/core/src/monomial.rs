//! Monomials as exponent vectors over a fixed ambient variable set.
//!
//! Variables are indexed from 0 internally. Display uses `x1, x2, ...` so
//! that printed monomials read the same way as they are usually written.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Largest ambient size for operations that pack supports into a `u64`.
pub const MAX_VARS: usize = 64;

pub(crate) type Exponents = SmallVec<[u32; 8]>;

/// A monomial `x^a` stored as its exponent vector `a`.
///
/// The derived ordering is lexicographic on exponent vectors, which is the
/// lex monomial order with `x1 > x2 > ... > xn`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    exponents: Exponents,
}

impl Monomial {
    pub fn new(exponents: impl Into<Vec<u32>>) -> Self {
        let v: Vec<u32> = exponents.into();
        Monomial {
            exponents: Exponents::from_vec(v),
        }
    }

    pub fn from_slice(exponents: &[u32]) -> Self {
        Monomial {
            exponents: Exponents::from_slice(exponents),
        }
    }

    /// The monomial 1 in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial {
            exponents: smallvec::smallvec![0; n],
        }
    }

    /// The variable `x_i` (0-based).
    pub fn var(n: usize, i: usize) -> Self {
        let mut m = Self::one(n);
        m.exponents[i] = 1;
        m
    }

    /// `x_i^e` (0-based).
    pub fn var_pow(n: usize, i: usize, e: u32) -> Self {
        let mut m = Self::one(n);
        m.exponents[i] = e;
        m
    }

    /// Squarefree monomial on the given 0-based variables.
    pub fn squarefree(n: usize, vars: &[usize]) -> Self {
        let mut m = Self::one(n);
        for &i in vars {
            m.exponents[i] = 1;
        }
        m
    }

    pub fn n(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exponents[i]
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents.iter().all(|&e| e <= 1)
    }

    /// Indices of the variables dividing the monomial, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Support packed into a bitmask; requires `n <= 64`.
    pub fn support_mask(&self) -> u64 {
        debug_assert!(self.n() <= MAX_VARS);
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |acc, (i, _)| acc | (1u64 << i))
    }

    pub(crate) fn check_ambient(&self, n: usize) -> Result<()> {
        if self.n() != n {
            return Err(Error::AmbientMismatch {
                expected: n,
                found: self.n(),
            });
        }
        Ok(())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.n(), other.n());
        self.exponents
            .iter()
            .zip(other.exponents.iter())
            .all(|(a, b)| a <= b)
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.n(), other.n());
        let mut out = Exponents::with_capacity(self.n());
        for (a, b) in self.exponents.iter().zip(other.exponents.iter()) {
            out.push(a.checked_sub(*b)?);
        }
        Some(Monomial { exponents: out })
    }

    fn zip_with(&self, other: &Monomial, f: impl Fn(u32, u32) -> u32) -> Monomial {
        debug_assert_eq!(self.n(), other.n());
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(other.exponents.iter())
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, u32::min)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, u32::max)
    }

    /// `self / gcd(self, other)`: the generator of `(self) : other`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, |a, b| a.saturating_sub(b))
    }

    /// `x_j * self / x_i`, or `None` when `x_i` does not divide `self`.
    pub fn exchange(&self, i: usize, j: usize) -> Option<Monomial> {
        if self.exponents[i] == 0 {
            return None;
        }
        let mut m = self.clone();
        m.exponents[i] -= 1;
        m.exponents[j] += 1;
        Some(m)
    }

    /// Renders with the supplied variable names, e.g. `c*a^2`.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        Named { m: self, names }
    }
}

impl Mul for &Monomial {
    type Output = Monomial;

    fn mul(self, rhs: &Monomial) -> Monomial {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Mul for Monomial {
    type Output = Monomial;

    fn mul(self, rhs: Monomial) -> Monomial {
        &self * &rhs
    }
}

struct Named<'a> {
    m: &'a Monomial,
    names: &'a [String],
}

impl fmt::Display for Named<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.m.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            match self.names.get(i) {
                Some(name) => write!(f, "{name}")?,
                None => write!(f, "x{}", i + 1)?,
            }
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Named {
            m: self,
            names: &[],
        }
        .fmt(f)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

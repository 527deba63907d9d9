use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Laurent polynomial in `A` with integer coefficients.
///
/// Stored densely from the lowest nonzero exponent; zero is the empty
/// vector. Arithmetic wraps modulo 2^64, so results are exact whenever the
/// true coefficients fit in an `i64`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i32,
    coeffs: Vec<i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(coeff: i64, exp: i32) -> Self {
        LaurentPoly { low: exp, coeffs: vec![coeff] }.normalize()
    }

    /// `-A^2 - A^-2`, the value of an extra unknotted loop.
    pub fn delta() -> Self {
        Self::from_terms(&[(-1, 2), (-1, -2)])
    }

    pub fn from_terms(terms: &[(i64, i32)]) -> Self {
        terms.iter().fold(Self::zero(), |acc, &(c, e)| acc + Self::monomial(c, e))
    }

    fn normalize(mut self) -> Self {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead == self.coeffs.len() {
            return Self::zero();
        }
        self.coeffs.drain(..lead);
        self.low += lead as i32;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `(exponent, coefficient)` pairs with nonzero coefficient, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(i, &c)| (self.low + i as i32, c))
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        let i = exp - self.low;
        if i < 0 {
            0
        } else {
            self.coeffs.get(i as usize).copied().unwrap_or(0)
        }
    }

    pub fn min_exp(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn max_exp(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i32 - 1)
    }

    /// Multiplies by `A^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Substitutes `A -> A^-1`.
    pub fn invert_variable(&self) -> Self {
        match self.max_exp() {
            None => Self::zero(),
            Some(hi) => LaurentPoly { low: -hi, coeffs: self.coeffs.iter().rev().copied().collect() },
        }
    }

    pub fn add_assign_ref(&mut self, other: &LaurentPoly) {
        if other.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = other.clone();
            return;
        }
        let low = self.low.min(other.low);
        let high = (self.low + self.coeffs.len() as i32).max(other.low + other.coeffs.len() as i32);
        if low < self.low {
            let pad = (self.low - low) as usize;
            self.coeffs.splice(0..0, std::iter::repeat_n(0, pad));
            self.low = low;
        }
        self.coeffs.resize((high - low) as usize, 0);
        let off = (other.low - self.low) as usize;
        for (i, &c) in other.coeffs.iter().enumerate() {
            self.coeffs[off + i] = self.coeffs[off + i].wrapping_add(c);
        }
        *self = std::mem::take(self).normalize();
    }

    /// `Some(q)` with `self = q * other` when `other` divides exactly.
    pub fn exact_div(&self, other: &LaurentPoly) -> Option<LaurentPoly> {
        if other.is_zero() {
            return None;
        }
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        let lead_e = other.max_exp().unwrap();
        let lead_c = other.coeff(lead_e);
        while !rem.is_zero() {
            let e = rem.max_exp().unwrap();
            let c = rem.coeff(e);
            if c % lead_c != 0 || rem.coeffs.len() < other.coeffs.len() {
                return None;
            }
            let t = LaurentPoly::monomial(c / lead_c, e - lead_e);
            rem = &rem - &(&t * other);
            quot.add_assign_ref(&t);
        }
        Some(quot)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;

    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self.add_assign_ref(&rhs);
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|c| c.wrapping_neg()).collect() }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_assign_ref(&-rhs);
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].wrapping_add(a.wrapping_mul(b));
            }
        }
        LaurentPoly { low: self.low + rhs.low, coeffs }.normalize()
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// Highest power first, e.g. `-A^5 - A^-3 + A^-7`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<(i32, i64)> = self.terms().collect();
        for (k, &(e, c)) in terms.iter().rev().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if k == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.unsigned_abs();
            match (a, e) {
                (_, 0) => write!(f, "{a}")?,
                (1, 1) => f.write_str("A")?,
                (1, _) => write!(f, "A^{e}")?,
                (_, 1) => write!(f, "{a}A")?,
                _ => write!(f, "{a}A^{e}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Parses sums of terms `c`, `cA`, `cA^e` (signs between terms; `*`
    /// between coefficient and `A` optional).
    fn from_str(s: &str) -> Result<Self> {
        let err = |pos: usize, m: &str| Error::syntax("Laurent polynomial", pos, m);
        let chars: Vec<(usize, char)> = s.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        if chars.is_empty() {
            return Err(err(0, "empty polynomial"));
        }
        let at = |i: usize| chars.get(i).map(|&(p, _)| p).unwrap_or(s.len());
        let mut i = 0;
        let mut out = LaurentPoly::zero();
        let int = |i: &mut usize| -> Option<i64> {
            let start = *i;
            while chars.get(*i).is_some_and(|(_, c)| c.is_ascii_digit()) {
                *i += 1;
            }
            chars[start..*i].iter().map(|&(_, c)| c).collect::<String>().parse().ok()
        };
        while i < chars.len() {
            let mut sign = 1;
            match chars[i].1 {
                '+' => i += 1,
                '-' => {
                    sign = -1;
                    i += 1
                }
                _ if i > 0 => return Err(err(at(i), "expected '+' or '-' between terms")),
                _ => {}
            }
            let coeff = int(&mut i);
            if chars.get(i).is_some_and(|&(_, c)| c == '*') {
                i += 1;
            }
            let exp = if chars.get(i).is_some_and(|&(_, c)| c == 'A') {
                i += 1;
                if chars.get(i).is_some_and(|&(_, c)| c == '^') {
                    i += 1;
                    let neg = chars.get(i).is_some_and(|&(_, c)| c == '-');
                    if neg {
                        i += 1;
                    }
                    let e = int(&mut i).ok_or_else(|| err(at(i), "expected exponent"))?;
                    if neg { -e } else { e }
                } else {
                    1
                }
            } else if coeff.is_some() {
                0
            } else {
                return Err(err(at(i), "expected a term"));
            };
            out.add_assign_ref(&LaurentPoly::monomial(sign * coeff.unwrap_or(1), exp as i32));
        }
        Ok(out)
    }
}

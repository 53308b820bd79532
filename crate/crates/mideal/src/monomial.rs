//! Monomials as explicit exponent vectors, and the three term orders.
//!
//! Variables are numbered from 1 in every public method and in the text form
//! `x1^2*x2*x4`. The constant monomial prints as `1`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A monomial `x_1^{a_1} ... x_n^{a_n}` with its ambient variable count `n`.
///
/// The derived `Ord` is the lexicographic order with `x_1 > x_2 > ... > x_n`
/// on raw exponent vectors, which is what [`TermOrder::Lex`] uses.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

/// The term orders used throughout the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TermOrder {
    /// Lexicographic with `x_1 > ... > x_n`.
    Lex,
    /// Lexicographic with `x_n > ... > x_1`.
    LexReversed,
    /// `a < b` iff `nu_1(a) < nu_1(b)`, or the exponents of `x_1` agree and
    /// `a >_lex b`. Only defined between monomials of equal degree.
    Prec,
}

/// Degree, support and extreme indices of a monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportStats {
    pub degree: u32,
    pub support: Vec<usize>,
    pub max: Option<usize>,
    pub min: Option<usize>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    /// The variable `x_i` (1-based).
    pub fn var(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::Invalid(format!("variable x{i} outside 1..={n}")));
        }
        let mut exps = vec![0; n];
        exps[i - 1] = 1;
        Ok(Monomial { exps })
    }

    /// Square-free monomial `prod_{i in set} x_i` (1-based indices).
    pub fn from_support(n: usize, set: &[usize]) -> Result<Self> {
        let mut exps = vec![0; n];
        for &i in set {
            if i == 0 || i > n {
                return Err(Error::Invalid(format!("variable x{i} outside 1..={n}")));
            }
            exps[i - 1] = 1;
        }
        Ok(Monomial { exps })
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Exponent of `x_i`, 1-based. Indices outside `1..=n` read as 0.
    pub fn nu(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.exps.get(i - 1).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn support(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&i| self.nu(i) > 0).collect()
    }

    /// `max(u)`, the largest index of a variable dividing `u`.
    pub fn max_index(&self) -> Option<usize> {
        (1..=self.n()).rev().find(|&i| self.nu(i) > 0)
    }

    /// `min(u)`, the smallest index of a variable dividing `u`.
    pub fn min_index(&self) -> Option<usize> {
        (1..=self.n()).find(|&i| self.nu(i) > 0)
    }

    pub fn support_stats(&self) -> SupportStats {
        SupportStats {
            degree: self.degree(),
            support: self.support(),
            max: self.max_index(),
            min: self.min_index(),
        }
    }

    fn check_n(&self, other: &Monomial) -> Result<()> {
        if self.n() != other.n() {
            Err(Error::DimensionMismatch(self.n(), other.n()))
        } else {
            Ok(())
        }
    }

    /// `self | other`. Monomials over different rings never divide each other.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.n() == other.n() && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.n(), other.n());
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect()))
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.n(), other.n());
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.n(), other.n());
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect())
    }

    /// `self / gcd(self, other)`, the generator of `(self) : other`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.n(), other.n());
        Monomial::new(
            self.exps.iter().zip(&other.exps).map(|(a, b)| a.saturating_sub(*b)).collect(),
        )
    }

    /// Checked version of [`Monomial::colon`].
    pub fn try_colon(&self, other: &Monomial) -> Result<Monomial> {
        self.check_n(other)?;
        Ok(self.colon(other))
    }

    /// `x_i * self` (1-based).
    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[i - 1] += 1;
        Monomial { exps }
    }

    /// `self / x_i` when `x_i` divides `self` (1-based).
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.nu(i) == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[i - 1] -= 1;
        Some(Monomial { exps })
    }

    /// Multiply by `x_i^e`.
    pub fn mul_var_pow(&self, i: usize, e: u32) -> Monomial {
        let mut exps = self.exps.clone();
        exps[i - 1] += e;
        Monomial { exps }
    }

    /// Compare under a term order.
    pub fn compare(&self, other: &Monomial, ord: TermOrder) -> Result<Ordering> {
        self.check_n(other)?;
        match ord {
            TermOrder::Lex => Ok(self.exps.cmp(&other.exps)),
            TermOrder::LexReversed => Ok(self.exps.iter().rev().cmp(other.exps.iter().rev())),
            TermOrder::Prec => {
                let (da, db) = (self.degree(), other.degree());
                if da != db {
                    return Err(Error::DegreeMismatch(da, db));
                }
                Ok(match self.nu(1).cmp(&other.nu(1)) {
                    Ordering::Equal => other.exps.cmp(&self.exps),
                    o => o,
                })
            }
        }
    }

    /// Lexicographic comparison, assuming equal `n`.
    pub fn lex_cmp(&self, other: &Monomial) -> Ordering {
        self.exps.cmp(&other.exps)
    }

    /// Parse the text form, e.g. `x1^2*x2*x4`, in a ring with `n` variables.
    pub fn parse(s: &str, n: usize) -> Result<Monomial> {
        let mut exps = vec![0u32; n];
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty monomial".into()));
        }
        if s == "1" {
            return Ok(Monomial { exps });
        }
        for factor in s.split('*') {
            let (i, e) = parse_factor(factor.trim())?;
            if i == 0 || i > n {
                return Err(Error::Parse(format!("variable x{i} outside 1..={n} in {s:?}")));
            }
            exps[i - 1] += e;
        }
        Ok(Monomial { exps })
    }

    /// Parse with `n` inferred as the largest variable index that occurs.
    pub fn parse_infer(s: &str) -> Result<Monomial> {
        let s = s.trim();
        if s == "1" {
            return Err(Error::Parse("cannot infer the ring of the constant 1".into()));
        }
        let mut n = 0;
        for factor in s.split('*') {
            n = n.max(parse_factor(factor.trim())?.0);
        }
        Monomial::parse(s, n)
    }
}

fn parse_factor(f: &str) -> Result<(usize, u32)> {
    let bad = || Error::Parse(format!("malformed factor {f:?}"));
    let rest = f.strip_prefix('x').ok_or_else(bad)?;
    let (idx, exp) = match rest.split_once('^') {
        Some((a, b)) => (a.trim(), Some(b.trim())),
        None => (rest, None),
    };
    let i: usize = idx.parse().map_err(|_| bad())?;
    let e: u32 = match exp {
        Some(e) => e.parse().map_err(|_| bad())?,
        None => 1,
    };
    Ok((i, e))
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (k, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", k + 1)?;
            } else {
                write!(f, "x{}^{}", k + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All monomials of degree `d` in `n` variables, strictly descending in lex.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    let mut exps = vec![0u32; n];
    fill_desc(&mut exps, 0, d, &mut out);
    out
}

fn fill_desc(exps: &mut Vec<u32>, pos: usize, left: u32, out: &mut Vec<Monomial>) {
    let n = exps.len();
    if pos == n - 1 {
        exps[pos] = left;
        out.push(Monomial::new(exps.clone()));
        exps[pos] = 0;
        return;
    }
    for e in (0..=left).rev() {
        exps[pos] = e;
        fill_desc(exps, pos + 1, left - e, out);
    }
    exps[pos] = 0;
}

/// `C(n + d - 1, d)`, the number of monomials of degree `d` in `n` variables.
pub fn count_of_degree(n: usize, d: u32) -> u128 {
    if n == 0 {
        return u128::from(d == 0);
    }
    binomial((n as u128) + (d as u128) - 1, d as u128)
}

/// Binomial coefficient with `C(a, b) = 0` for `b > a`.
pub fn binomial(a: u128, b: u128) -> u128 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut r: u128 = 1;
    for k in 0..b {
        r = r * (a - k) / (k + 1);
    }
    r
}

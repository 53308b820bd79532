//! Exact sparse rank over the rationals or a prime field, and homology of
//! cell complexes whose cells are vertex bitmasks.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u64),
}

pub const DEFAULT_PRIME: u64 = 32003;

impl Field {
    /// Field of characteristic `c`: `0` gives the rationals.
    pub fn from_char(c: u64) -> Result<Field> {
        match c {
            0 => Ok(Field::Rational),
            p if is_prime(p) && p < (1 << 31) => Ok(Field::Prime(p)),
            p => Err(Error::Invalid(format!("characteristic {p} is not a prime below 2^31"))),
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "ZZ/{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Field> {
        match s.trim() {
            "Q" | "QQ" | "0" => Ok(Field::Rational),
            t => {
                let t = t.strip_prefix("ZZ/").unwrap_or(t);
                Field::from_char(t.parse().map_err(|_| Error::Parse(format!("unknown field {s:?}")))?)
            }
        }
    }
}

impl Serialize for Field {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Field {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= p {
        if p.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

/// Sparse integer matrix stored by rows; each row sorted by column.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    pub ncols: usize,
    pub rows: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn new(ncols: usize) -> Self {
        SparseMatrix { ncols, rows: Vec::new() }
    }

    pub fn push_row(&mut self, mut row: Vec<(usize, i64)>) {
        row.sort_unstable_by_key(|e| e.0);
        row.retain(|e| e.1 != 0);
        self.rows.push(row);
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    /// Reorder rows and relabel columns: row `k` moves to `row_perm[k]` and
    /// column `c` becomes `col_perm[c]`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> SparseMatrix {
        let mut rows = vec![Vec::new(); self.rows.len()];
        for (k, r) in self.rows.iter().enumerate() {
            let mut nr: Vec<(usize, i64)> = r.iter().map(|&(c, v)| (col_perm[c], v)).collect();
            nr.sort_unstable_by_key(|e| e.0);
            rows[row_perm[k]] = nr;
        }
        SparseMatrix { ncols: self.ncols, rows }
    }

    pub fn rank(&self, field: Field) -> usize {
        match field {
            Field::Prime(p) => rank_generic(&self.rows, &ModP(p)),
            Field::Rational => rank_generic(&self.rows, &Rationals),
        }
    }
}

trait Arith {
    type E: Clone;
    fn of_i64(&self, v: i64) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn sub_mul(&self, a: &Self::E, c: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn inv(&self, a: &Self::E) -> Self::E;
}

struct ModP(u64);

impl Arith for ModP {
    type E = u64;
    fn of_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.0 as i64) as u64
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn sub_mul(&self, a: &u64, c: &u64, b: &u64) -> u64 {
        let p = self.0;
        (a + p - (c * b) % p) % p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        (a * b) % self.0
    }
    fn inv(&self, a: &u64) -> u64 {
        let (mut r, mut b, mut e) = (1u64, *a % self.0, self.0 - 2);
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % self.0;
            }
            b = b * b % self.0;
            e >>= 1;
        }
        r
    }
}

struct Rationals;

impl Arith for Rationals {
    type E = BigRational;
    fn of_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn sub_mul(&self, a: &BigRational, c: &BigRational, b: &BigRational) -> BigRational {
        a - c * b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        BigRational::one() / a
    }
}

// Incremental row echelon form: each incoming row is reduced by the pivot
// rows keyed on its current leading column until it vanishes or owns a new
// pivot.
fn rank_generic<A: Arith>(rows: &[Vec<(usize, i64)>], ar: &A) -> usize {
    let mut pivots: HashMap<usize, Vec<(usize, A::E)>> = HashMap::new();
    for r in rows {
        let mut row: Vec<(usize, A::E)> = r
            .iter()
            .map(|&(c, v)| (c, ar.of_i64(v)))
            .filter(|(_, v)| !ar.is_zero(v))
            .collect();
        loop {
            let Some((lead, lv)) = row.first().cloned() else { break };
            match pivots.get(&lead) {
                Some(p) => row = combine(&row, &lv, p, ar),
                None => {
                    let inv = ar.inv(&lv);
                    let norm = row.into_iter().map(|(c, v)| (c, ar.mul(&v, &inv))).collect();
                    pivots.insert(lead, norm);
                    break;
                }
            }
        }
    }
    pivots.len()
}

// row - c * pivot, where the pivot has leading coefficient 1.
fn combine<A: Arith>(row: &[(usize, A::E)], c: &A::E, pivot: &[(usize, A::E)], ar: &A) -> Vec<(usize, A::E)> {
    let zero = ar.of_i64(0);
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let take_row = j >= pivot.len() || (i < row.len() && row[i].0 < pivot[j].0);
        let take_piv = i >= row.len() || (j < pivot.len() && pivot[j].0 < row[i].0);
        let (col, val) = if take_row {
            i += 1;
            (row[i - 1].0, row[i - 1].1.clone())
        } else if take_piv {
            j += 1;
            (pivot[j - 1].0, ar.sub_mul(&zero, c, &pivot[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (row[i - 1].0, ar.sub_mul(&row[i - 1].1, c, &pivot[j - 1].1))
        };
        if !ar.is_zero(&val) {
            out.push((col, val));
        }
    }
    out
}

/// A finite chain complex whose cells are subsets of a ground set of at most
/// 64 elements, graded by cardinality. The boundary of a cell is the signed
/// sum of its codimension-one faces that are themselves cells; the sign of
/// removing the element at position `a` is `(-1)^a`.
#[derive(Clone, Debug, Default)]
pub struct CellComplex {
    /// `cells[s]` lists the cells of cardinality `s`.
    pub cells: Vec<Vec<u64>>,
}

impl CellComplex {
    pub fn from_cells(list: impl IntoIterator<Item = u64>) -> Self {
        let mut cells: Vec<Vec<u64>> = Vec::new();
        for c in list {
            let s = c.count_ones() as usize;
            if cells.len() <= s {
                cells.resize(s + 1, Vec::new());
            }
            cells[s].push(c);
        }
        for v in &mut cells {
            v.sort_unstable();
            v.dedup();
        }
        CellComplex { cells }
    }

    /// Boundary matrix from cardinality `s` to `s - 1`: one row per cell of
    /// cardinality `s`, columns indexed by the cells of cardinality `s - 1`.
    pub fn boundary(&self, s: usize) -> SparseMatrix {
        let empty = Vec::new();
        let lower = if s >= 1 { self.cells.get(s - 1).unwrap_or(&empty) } else { &empty };
        let index: HashMap<u64, usize> = lower.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        let mut m = SparseMatrix::new(lower.len());
        for &c in self.cells.get(s).unwrap_or(&empty) {
            let mut row = Vec::new();
            let mut rest = c;
            let mut pos = 0;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                if let Some(&k) = index.get(&(c & !bit)) {
                    row.push((k, if pos % 2 == 0 { 1 } else { -1 }));
                }
                pos += 1;
                rest &= rest - 1;
            }
            m.push_row(row);
        }
        m
    }

    /// Homology dimensions `h[s]` of the chain group of cardinality `s`.
    /// With the empty cell present this is reduced homology shifted by one:
    /// `h[s]` is `dim H~_{s-1}`.
    pub fn homology(&self, field: Field) -> Vec<u64> {
        let top = self.cells.len();
        let ranks: Vec<usize> = (0..=top).map(|s| if s == 0 { 0 } else { self.boundary(s).rank(field) }).collect();
        (0..top)
            .map(|s| (self.cells[s].len() - ranks[s] - ranks[s + 1]) as u64)
            .collect()
    }
}

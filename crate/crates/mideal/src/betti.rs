//! Graded Betti tables.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Graded Betti numbers `beta_{i,j}` of an ideal, `i` homological and `j`
/// internal degree. Zero entries are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BettiTable {
    entries: BTreeMap<(usize, u32), u64>,
}

#[derive(Serialize, Deserialize)]
struct BettiEntry {
    i: usize,
    j: u32,
    beta: u64,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, i: usize, j: u32, count: u64) {
        if count == 0 {
            return;
        }
        *self.entries.entry((i, j)).or_insert(0) += count;
    }

    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Total Betti number `beta_i`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries.range((i, 0)..=(i, u32::MAX)).map(|(_, v)| v).sum()
    }

    /// `(beta_0, beta_1, ...)` up to the projective dimension.
    pub fn totals(&self) -> Vec<u64> {
        match self.projdim() {
            Some(p) => (0..=p).map(|i| self.total(i)).collect(),
            None => Vec::new(),
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, u32, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Projective dimension of the ideal.
    pub fn projdim(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// Castelnuovo-Mumford regularity, `max(j - i)`.
    pub fn regularity(&self) -> Option<u32> {
        self.entries.keys().map(|&(i, j)| j - i as u32).max()
    }

    /// Whether the resolution is `d`-linear: `beta_{i,j} = 0` unless `j = i + d`.
    pub fn is_linear(&self, d: u32) -> bool {
        self.entries.keys().all(|&(i, j)| j == i as u32 + d)
    }

    /// Whether the table is linear in the degree of its first generators.
    pub fn is_linear_any(&self) -> bool {
        match self.entries.keys().find(|&&(i, _)| i == 0) {
            Some(&(_, d)) => self.is_linear(d),
            None => true,
        }
    }

    /// Shift homological degree by `di` and internal degree by `dj`.
    pub fn shifted(&self, di: usize, dj: u32) -> BettiTable {
        BettiTable {
            entries: self.entries.iter().map(|(&(i, j), &b)| ((i + di, j + dj), b)).collect(),
        }
    }

    pub fn merge(&mut self, other: &BettiTable) {
        for (i, j, b) in other.entries() {
            self.add(i, j, b);
        }
    }
}

impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<BettiEntry> = self.entries().map(|(i, j, beta)| BettiEntry { i, j, beta }).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BettiTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<BettiEntry>::deserialize(d)?;
        let mut t = BettiTable::new();
        for e in v {
            t.add(e.i, e.j, e.beta);
        }
        Ok(t)
    }
}

/// Macaulay-style grid: row `r` lists `beta_{i, i+r}` for each column `i`.
impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(p) = self.projdim() else {
            return write!(f, "(zero)");
        };
        let rows: Vec<u32> = {
            let mut r: Vec<u32> = self.entries.keys().map(|&(i, j)| j - i as u32).collect();
            r.sort_unstable();
            r.dedup();
            r
        };
        let lo = rows[0];
        let hi = *rows.last().unwrap();
        let width = self
            .entries
            .values()
            .map(|b| b.to_string().len())
            .max()
            .unwrap_or(1)
            .max(p.to_string().len())
            .max(5);
        write!(f, "{:>6}", "")?;
        for i in 0..=p {
            write!(f, " {:>width$}", i)?;
        }
        writeln!(f)?;
        write!(f, "{:>6}", "total:")?;
        for i in 0..=p {
            write!(f, " {:>width$}", self.total(i))?;
        }
        for r in lo..=hi {
            writeln!(f)?;
            write!(f, "{:>5}:", r)?;
            for i in 0..=p {
                let b = self.get(i, r + i as u32);
                if b == 0 {
                    write!(f, " {:>width$}", ".")?;
                } else {
                    write!(f, " {:>width$}", b)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_queries() {
        let mut t = BettiTable::new();
        t.add(0, 2, 1);
        t.add(0, 3, 3);
        t.add(1, 4, 4);
        t.add(2, 5, 1);
        t.add(2, 6, 0);
        assert_eq!(t.totals(), vec![4, 4, 1]);
        assert_eq!(t.projdim(), Some(2));
        assert_eq!(t.regularity(), Some(3));
        assert!(!t.is_linear(2));
        let s = serde_json::to_string(&t).unwrap();
        let back: BettiTable = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
        let grid = t.to_string();
        assert!(grid.contains("total:"));
    }
}

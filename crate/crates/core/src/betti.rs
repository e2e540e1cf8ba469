//! Sparse graded Betti diagrams whose entries may be only partially known.
//!
//! `β_{i,j}` counts the generators of `F_i = ⊕_j R(-i-j)^{β_{i,j}}` in a minimal
//! free resolution of the ideal of the curve. Absent keys are exact zeros.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BettiEntry {
    Known(BigUint),
    /// Nonzero, exact value not determined.
    Positive,
    /// Not determined at all.
    Unknown,
}

impl BettiEntry {
    pub fn known(n: impl Into<BigUint>) -> Self {
        BettiEntry::Known(n.into())
    }

    pub fn as_known(&self) -> Option<&BigUint> {
        match self {
            BettiEntry::Known(n) => Some(n),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, BettiEntry::Known(n) if n.is_zero())
    }
}

impl fmt::Display for BettiEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BettiEntry::Known(n) => write!(f, "{n}"),
            BettiEntry::Positive => f.write_str("+"),
            BettiEntry::Unknown => f.write_str("?"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiDiagram {
    r: i64,
    /// Keyed by `(j, i)` so iteration runs row by row.
    entries: BTreeMap<(i64, i64), BettiEntry>,
}

impl BettiDiagram {
    pub fn new(r: i64) -> Self {
        BettiDiagram {
            r,
            entries: BTreeMap::new(),
        }
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    /// Sets `β_{i,j}`; storing `Known(0)` removes the key.
    ///
    /// Panics if `i` is outside `1..=r` or `j < 1`.
    pub fn set(&mut self, i: i64, j: i64, entry: BettiEntry) {
        assert!(
            (1..=self.r).contains(&i) && j >= 1,
            "β_{{{i},{j}}} outside a diagram with r={}",
            self.r
        );
        if entry.is_zero() {
            self.entries.remove(&(j, i));
        } else {
            self.entries.insert((j, i), entry);
        }
    }

    pub fn get(&self, i: i64, j: i64) -> BettiEntry {
        self.entries
            .get(&(j, i))
            .cloned()
            .unwrap_or_else(|| BettiEntry::Known(BigUint::zero()))
    }

    /// Nonzero-or-undetermined entries as `(i, j, entry)`, sorted by `(j, i)`.
    pub fn iter(&self) -> impl Iterator<Item = (i64, i64, &BettiEntry)> {
        self.entries.iter().map(|(&(j, i), e)| (i, j, e))
    }

    pub fn is_fully_known(&self) -> bool {
        self.entries
            .values()
            .all(|e| matches!(e, BettiEntry::Known(_)))
    }

    /// Largest row index holding a stored entry.
    pub fn top_row(&self) -> Option<i64> {
        self.entries.keys().map(|&(j, _)| j).max()
    }
}

/// Conventional layout: one column per homological degree `i`, one row per
/// shift `j`; exact zeros print as `.`.
impl fmt::Display for BettiDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.top_row().unwrap_or(1);
        let cols: Vec<i64> = (1..=self.r).collect();
        let cell = |i: i64, j: i64| {
            let e = self.get(i, j);
            if e.is_zero() {
                ".".to_string()
            } else {
                e.to_string()
            }
        };
        let label_w = format!("{rows}:").len().max("j\\i".len());
        let mut widths: Vec<usize> = cols.iter().map(|i| i.to_string().len()).collect();
        for j in 1..=rows {
            for (w, &i) in widths.iter_mut().zip(&cols) {
                *w = (*w).max(cell(i, j).len());
            }
        }

        write!(f, "{:>label_w$}", "j\\i")?;
        for (w, i) in widths.iter().zip(&cols) {
            write!(f, " {i:>w$}")?;
        }
        writeln!(f)?;
        for j in 1..=rows {
            write!(f, "{:>label_w$}", format!("{j}:"))?;
            for (w, &i) in widths.iter().zip(&cols) {
                write!(f, " {:>w$}", cell(i, j))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sparse_form_is_canonical() {
        let mut d = BettiDiagram::new(3);
        d.set(1, 1, BettiEntry::known(1u32));
        d.set(2, 1, BettiEntry::known(0u32));
        d.set(2, 2, BettiEntry::Positive);
        d.set(2, 2, BettiEntry::known(0u32));
        assert_eq!(d.iter().count(), 1);
        assert_eq!(d.get(2, 1), BettiEntry::known(0u32));
        assert!(d.is_fully_known());
        d.set(3, 2, BettiEntry::Unknown);
        assert!(!d.is_fully_known());
        assert_eq!(d.top_row(), Some(2));
    }

    #[test]
    fn iteration_order_is_row_major() {
        let mut d = BettiDiagram::new(4);
        d.set(3, 1, BettiEntry::known(1u32));
        d.set(1, 2, BettiEntry::known(2u32));
        d.set(1, 1, BettiEntry::known(3u32));
        let order: Vec<(i64, i64)> = d.iter().map(|(i, j, _)| (i, j)).collect();
        assert_eq!(order, vec![(1, 1), (3, 1), (1, 2)]);
    }

    #[test]
    #[should_panic]
    fn rejects_out_of_range_column() {
        BettiDiagram::new(2).set(3, 1, BettiEntry::Positive);
    }

    #[test]
    fn renders_table() {
        let mut d = BettiDiagram::new(3);
        d.set(1, 1, BettiEntry::known(1u32));
        d.set(1, 2, BettiEntry::known(2u32));
        d.set(2, 2, BettiEntry::known(12u32));
        d.set(3, 2, BettiEntry::Unknown);
        let expected = "j\\i 1  2 3\n 1: 1  . .\n 2: 2 12 ?\n";
        assert_eq!(d.to_string(), expected);
    }
}

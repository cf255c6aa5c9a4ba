//! Sparse exact linear algebra over ℚ: echelon forms, rank and nullspace.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::Rational;

/// A sparse row: `(column, value)` pairs sorted by column, no zeros.
pub type SparseRow = Vec<(usize, Rational)>;

/// Builds a sparse row from arbitrary `(column, value)` pairs, summing repeats.
pub fn sparse_row(entries: impl IntoIterator<Item = (usize, Rational)>) -> SparseRow {
    let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
    for (c, v) in entries {
        *acc.entry(c).or_insert_with(Rational::zero) += v;
    }
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// Row space in echelon form: every stored row has leading coefficient 1 and
/// distinct leading columns. [`Echelon::reduce_fully`] brings it to reduced
/// row echelon form.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    pivots: BTreeMap<usize, SparseRow>,
    reduced: bool,
}

fn subtract_scaled(
    acc: &mut BTreeMap<usize, Rational>,
    row: &[(usize, Rational)],
    factor: &Rational,
) {
    for (c, v) in row {
        let e = acc.entry(*c).or_insert_with(Rational::zero);
        *e -= factor * v;
        if e.is_zero() {
            acc.remove(c);
        }
    }
}

impl Echelon {
    pub fn new() -> Self {
        Self {
            pivots: BTreeMap::new(),
            reduced: true,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Rows in order of pivot column.
    pub fn rows(&self) -> impl Iterator<Item = &SparseRow> {
        self.pivots.values()
    }

    /// Eliminates every pivot column from `row`.
    pub fn reduce(&self, row: &[(usize, Rational)]) -> SparseRow {
        let mut acc: BTreeMap<usize, Rational> = row.iter().cloned().collect();
        let mut out = Vec::new();
        while let Some((c, v)) = acc.pop_first() {
            match self.pivots.get(&c) {
                Some(p) => subtract_scaled(&mut acc, &p[1..], &v),
                None => out.push((c, v)),
            }
        }
        out
    }

    pub fn contains(&self, row: &[(usize, Rational)]) -> bool {
        self.reduce(row).is_empty()
    }

    /// Adds a row to the span; returns `true` if it raised the rank.
    pub fn insert(&mut self, row: &[(usize, Rational)]) -> bool {
        let mut acc: BTreeMap<usize, Rational> = row.iter().cloned().collect();
        loop {
            let Some((&c, v)) = acc.first_key_value() else {
                return false;
            };
            let Some(p) = self.pivots.get(&c) else { break };
            let v = v.clone();
            acc.pop_first();
            subtract_scaled(&mut acc, &p[1..], &v);
        }
        let (lead, lv) = acc.pop_first().expect("non-empty");
        let inv = lv.recip();
        let mut r = vec![(lead, Rational::one())];
        r.extend(acc.into_iter().map(|(c, v)| (c, v * &inv)));
        self.pivots.insert(lead, r);
        self.reduced = false;
        true
    }

    /// Back-substitutes so that every row is zero in all other pivot columns.
    pub fn reduce_fully(&mut self) {
        if self.reduced {
            return;
        }
        let leads: Vec<usize> = self.pivots.keys().rev().copied().collect();
        for lead in leads {
            let row = self.pivots.remove(&lead).expect("pivot");
            let tail = self.reduce(&row[1..]);
            let mut r = vec![row[0].clone()];
            r.extend(tail);
            self.pivots.insert(lead, r);
        }
        self.reduced = true;
    }

    /// Basis of `{x : A x = 0}` for the stored rows, one vector per free
    /// column (in increasing order), with `x_free = 1`.
    pub fn nullspace(&mut self, columns: usize) -> Vec<SparseRow> {
        self.reduce_fully();
        let mut by_free: BTreeMap<usize, Vec<(usize, Rational)>> = BTreeMap::new();
        for (&p, row) in &self.pivots {
            for (c, v) in row.iter().skip(1) {
                by_free.entry(*c).or_default().push((p, -v.clone()));
            }
        }
        (0..columns)
            .filter(|c| !self.pivots.contains_key(c))
            .map(|f| {
                let mut entries = by_free.remove(&f).unwrap_or_default();
                entries.push((f, Rational::one()));
                sparse_row(entries)
            })
            .collect()
    }
}

/// Row-reduces `rows` with leftmost pivots.
///
/// The reduced form does not depend on the order rows are eliminated in, so
/// rows are fed sparsest first (stable in the given order) to limit fill-in.
pub fn row_reduce<'a>(rows: impl IntoIterator<Item = &'a SparseRow>) -> Echelon {
    let mut rows: Vec<&SparseRow> = rows.into_iter().collect();
    rows.sort_by_key(|r| r.len());
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e
}

pub fn rank<'a>(rows: impl IntoIterator<Item = &'a SparseRow>) -> usize {
    row_reduce(rows).rank()
}

/// Nullspace of the matrix whose rows are `rows` with `columns` columns.
pub fn nullspace<'a>(
    rows: impl IntoIterator<Item = &'a SparseRow>,
    columns: usize,
) -> Vec<SparseRow> {
    row_reduce(rows).nullspace(columns)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(entries: &[(usize, i64)]) -> SparseRow {
        sparse_row(
            entries
                .iter()
                .map(|&(c, v)| (c, Rational::from_integer(v.into()))),
        )
    }

    fn apply(rows: &[SparseRow], x: &SparseRow) -> Vec<Rational> {
        rows.iter()
            .map(|row| {
                let mut s = Rational::zero();
                for (c, v) in row {
                    if let Ok(i) = x.binary_search_by_key(c, |(k, _)| *k) {
                        s += v * &x[i].1;
                    }
                }
                s
            })
            .collect()
    }

    #[test]
    fn small_nullspace() {
        // x0 + 2x1 + 3x2 = 0, 2x0 + 4x1 + 7x2 = 0  ⇒  x2 = 0, x0 = -2x1
        let rows = vec![r(&[(0, 1), (1, 2), (2, 3)]), r(&[(0, 2), (1, 4), (2, 7)])];
        let ns = nullspace(&rows, 3);
        assert_eq!(ns, vec![r(&[(0, -2), (1, 1)])]);
        assert!(apply(&rows, &ns[0]).iter().all(Zero::is_zero));
        assert_eq!(rank(&rows), 2);
    }

    #[test]
    fn zero_columns_are_free() {
        let rows = vec![r(&[(2, 5)])];
        let ns = nullspace(&rows, 3);
        assert_eq!(ns, vec![r(&[(0, 1)]), r(&[(1, 1)])]);
    }

    #[test]
    fn reduced_form_is_maintained() {
        let mut e = Echelon::new();
        assert!(e.insert(&r(&[(1, 1), (2, 1)])));
        assert!(e.insert(&r(&[(0, 1), (1, 1)])));
        assert!(!e.insert(&r(&[(0, 1), (2, -1)])));
        e.reduce_fully();
        for row in e.rows() {
            assert!(row[0].1.is_one());
            for p in e.pivot_columns().filter(|&p| p != row[0].0) {
                assert!(row.iter().all(|(c, _)| *c != p));
            }
        }
        assert!(e.contains(&r(&[(0, 2), (2, -2)])));
    }
}

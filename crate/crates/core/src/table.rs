use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// One column `T_k^(n)` for `n = first ..`.
#[derive(Debug, Clone, PartialEq)]
struct Column<S> {
    first: usize,
    cells: Vec<Option<S>>,
}

/// Triangular table `T_k^(n)` of a sequence transformation.
///
/// `None` cells are entries whose recursion hit a guard trip or depends on
/// such an entry. Entry `(k, n)` is computed from `s_n ..= s_{last_index}`
/// where `last_index = n + span * k + lookahead` for `k > 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct TransformTable<S> {
    columns: Vec<Column<S>>,
    span: usize,
    lookahead: usize,
}

impl<S: Scalar> TransformTable<S> {
    /// Starts a table whose order-zero column is the input sequence.
    pub(crate) fn new(input: &[S], span: usize) -> Self {
        TransformTable {
            columns: vec![Column {
                first: 0,
                cells: input.iter().copied().map(Some).collect(),
            }],
            span,
            lookahead: 0,
        }
    }

    pub(crate) fn with_lookahead(mut self, lookahead: usize) -> Self {
        self.lookahead = lookahead;
        self
    }

    /// Appends the next column; empty columns are dropped.
    pub(crate) fn push_column(&mut self, first: usize, cells: Vec<Option<S>>) -> bool {
        if cells.is_empty() {
            return false;
        }
        self.columns.push(Column { first, cells });
        true
    }

    pub(crate) fn from_columns(columns: Vec<(usize, Vec<Option<S>>)>, span: usize) -> Self {
        TransformTable {
            columns: columns
                .into_iter()
                .filter(|(_, c)| !c.is_empty())
                .map(|(first, cells)| Column { first, cells })
                .collect(),
            span,
            lookahead: 0,
        }
    }

    pub fn max_order(&self) -> usize {
        self.columns.len() - 1
    }

    /// Largest index of the order-zero column.
    pub fn max_index(&self) -> usize {
        self.columns[0].cells.len() - 1
    }

    pub fn span(&self) -> usize {
        self.span
    }

    /// Index range `first..end` present in column `k`.
    pub fn index_range(&self, k: usize) -> Option<std::ops::Range<usize>> {
        self.columns.get(k).map(|c| c.first..c.first + c.cells.len())
    }

    /// `None` if `(k, n)` lies outside the table, `Some(None)` if the entry
    /// exists but is invalid.
    pub fn entry(&self, k: usize, n: usize) -> Option<Option<S>> {
        let c = self.columns.get(k)?;
        let i = n.checked_sub(c.first)?;
        c.cells.get(i).copied()
    }

    /// The entry value if it exists and is valid.
    pub fn get(&self, k: usize, n: usize) -> Option<S> {
        self.entry(k, n).flatten()
    }

    pub fn column(&self, k: usize) -> impl Iterator<Item = (usize, Option<S>)> + '_ {
        let c = &self.columns[k];
        c.cells.iter().enumerate().map(move |(i, v)| (c.first + i, *v))
    }

    /// Highest input index consumed by entry `(k, n)`.
    pub fn last_index(&self, k: usize, n: usize) -> usize {
        if k == 0 {
            n
        } else {
            n + self.span * k + self.lookahead
        }
    }

    /// Smallest `n` at which order 1 exists, or 0 for a single-column table.
    pub fn first_transformed_index(&self) -> usize {
        self.columns.get(1).map_or(0, |c| c.first)
    }

    /// All cells along `path`, including invalid ones.
    pub fn path_cells(&self, path: PathSpec) -> Result<Vec<PathCell<S>>> {
        let cell = |k: usize, n: usize| self.entry(k, n).map(|value| PathCell { k, n, value });
        match path {
            PathSpec::OrderConstant(k) => {
                if k > self.max_order() {
                    return Err(Error::PathOutOfRange {
                        value: k,
                        bound: self.max_order(),
                    });
                }
                Ok(self.column(k).map(|(n, value)| PathCell { k, n, value }).collect())
            }
            PathSpec::IndexConstant(n0) => {
                if n0 > self.max_index() {
                    return Err(Error::PathOutOfRange {
                        value: n0,
                        bound: self.max_index(),
                    });
                }
                Ok((0..=self.max_order()).filter_map(|k| cell(k, n0)).collect())
            }
            PathSpec::Staircase => {
                let mut out = Vec::new();
                for m in 0..=self.max_index() {
                    let best = (0..=self.max_order())
                        .rev()
                        .filter_map(|k| {
                            let r = self.index_range(k)?;
                            r.into_iter().find(|&n| self.last_index(k, n) == m).map(|n| (k, n))
                        })
                        .next();
                    if let Some((k, n)) = best {
                        out.extend(cell(k, n));
                    }
                }
                Ok(out)
            }
        }
    }
}

/// Traversal of a transform table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathSpec {
    /// Fixed order `k`, increasing `n`.
    OrderConstant(usize),
    /// Fixed minimal index `n`, increasing `k`.
    IndexConstant(usize),
    /// For every data budget `m` the highest-order entry whose last input
    /// element is `s_m`. On the epsilon table this is
    /// `[0/0], [1/0], [1/1], [2/1], ...`.
    Staircase,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathCell<S> {
    pub k: usize,
    pub n: usize,
    pub value: Option<S>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathEntry<S> {
    pub k: usize,
    pub n: usize,
    pub value: S,
}

/// Valid entries of `table` along `path`, in path order.
pub fn extract_path<S: Scalar>(table: &TransformTable<S>, path: PathSpec) -> Result<Vec<PathEntry<S>>> {
    Ok(table
        .path_cells(path)?
        .into_iter()
        .filter_map(|c| c.value.map(|value| PathEntry { k: c.k, n: c.n, value }))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> TransformTable<f64> {
        // column k has entries n = 0 ..= 3 - k
        let cols = (0..3)
            .map(|k| (0, (0..4 - k).map(|n| Some((10 * k + n) as f64)).collect()))
            .collect();
        TransformTable::from_columns(cols, 1)
    }

    #[test]
    fn index_constant_walks_orders() {
        let t = triangle();
        let p = extract_path(&t, PathSpec::IndexConstant(0)).unwrap();
        let kn: Vec<_> = p.iter().map(|e| (e.k, e.n)).collect();
        assert_eq!(kn, vec![(0, 0), (1, 0), (2, 0)]);
    }

    #[test]
    fn order_constant_walks_indices() {
        let t = triangle();
        let p = extract_path(&t, PathSpec::OrderConstant(1)).unwrap();
        let kn: Vec<_> = p.iter().map(|e| (e.k, e.n)).collect();
        assert_eq!(kn, vec![(1, 0), (1, 1), (1, 2)]);
    }

    #[test]
    fn out_of_range() {
        let t = triangle();
        assert!(matches!(
            extract_path(&t, PathSpec::OrderConstant(3)),
            Err(Error::PathOutOfRange { value: 3, bound: 2 })
        ));
        assert!(extract_path(&t, PathSpec::IndexConstant(4)).is_err());
    }

    #[test]
    fn invalid_cells_skipped() {
        let t = TransformTable::from_columns(vec![(0, vec![Some(1.0), Some(2.0)]), (0, vec![None])], 1);
        assert_eq!(extract_path(&t, PathSpec::IndexConstant(0)).unwrap().len(), 1);
        assert_eq!(t.path_cells(PathSpec::IndexConstant(0)).unwrap().len(), 2);
        assert_eq!(t.entry(1, 0), Some(None));
        assert_eq!(t.entry(1, 1), None);
    }

    #[test]
    fn staircase_span_two() {
        let cols = (0..3)
            .map(|k| (0, (0..5 - 2 * k).map(|_| Some(k as f64)).collect()))
            .collect();
        let t = TransformTable::from_columns(cols, 2);
        let kn: Vec<_> = extract_path(&t, PathSpec::Staircase)
            .unwrap()
            .iter()
            .map(|e| (e.k, e.n))
            .collect();
        assert_eq!(kn, vec![(0, 0), (0, 1), (1, 0), (1, 1), (2, 0)]);
    }
}

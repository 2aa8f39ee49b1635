//! Weight matrices and profiles.
//!
//! A `d x n` integer matrix `W` assigns each ground element a column of
//! `d` criterion weights; the profile of a subset is the vector of its
//! per-criterion totals.

use crate::error::{Error, Result};

/// The ground set `{0, .., n-1}`; a thin validator shared by the
/// matroid constructors and the weight matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroundSet {
    pub size: usize,
}

impl GroundSet {
    pub fn new(size: usize) -> Self {
        GroundSet { size }
    }

    pub fn contains(&self, element: usize) -> bool {
        element < self.size
    }

    pub fn check_subset(&self, subset: &[usize]) -> Result<()> {
        match subset.iter().find(|&&e| !self.contains(e)) {
            Some(&bad) => Err(Error::input(format!(
                "element {bad} out of range for ground set of size {}",
                self.size
            ))),
            None => Ok(()),
        }
    }
}

/// Profile of a subset: the `d` criterion totals, compared
/// lexicographically (the tie-break order used everywhere).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Profile(pub Vec<i128>);

impl Profile {
    pub fn zero(d: usize) -> Self {
        Profile(vec![0; d])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i128] {
        &self.0
    }

    /// Componentwise shift by a constant, e.g. undoing the nonnegativity
    /// translation.
    pub fn shift_all(&self, delta: i128) -> Profile {
        Profile(self.0.iter().map(|&v| v + delta).collect())
    }
}

impl std::fmt::Display for Profile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMatrix {
    d: usize,
    n: usize,
    entries: Vec<i64>,
}

impl WeightMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let d = rows.len();
        if d == 0 {
            return Err(Error::input("weight matrix needs at least one row"));
        }
        let n = rows[0].len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::input("weight matrix rows have unequal lengths"));
        }
        Ok(WeightMatrix {
            d,
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn criteria(&self) -> usize {
        self.d
    }

    pub fn elements(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.d).map(|i| self.entry(i, j)).collect()
    }

    /// Profile of `subset`: coordinate `i` is the sum of row `i` over the
    /// subset. The empty subset maps to the zero profile.
    pub fn profile(&self, subset: &[usize]) -> Result<Profile> {
        GroundSet::new(self.n).check_subset(subset)?;
        let mut coords = vec![0i128; self.d];
        for &j in subset {
            for i in 0..self.d {
                coords[i] += i128::from(self.entry(i, j));
            }
        }
        Ok(Profile(coords))
    }

    /// Distinct entry values over the given columns, sorted ascending:
    /// the value list the combinatorial solver builds its patterns from.
    pub fn value_set(&self, cols: &[usize]) -> Result<Vec<i64>> {
        GroundSet::new(self.n).check_subset(cols)?;
        let mut values: Vec<i64> = cols
            .iter()
            .flat_map(|&j| (0..self.d).map(move |i| self.entry(i, j)))
            .collect();
        values.sort_unstable();
        values.dedup();
        Ok(values)
    }

    pub fn max_abs_entry(&self) -> i64 {
        self.entries.iter().map(|v| v.abs()).max().unwrap_or(0)
    }

    /// New matrix keeping only the given columns, reindexed to `0..cols.len()`.
    pub fn select_columns(&self, cols: &[usize]) -> Result<WeightMatrix> {
        GroundSet::new(self.n).check_subset(cols)?;
        let rows = (0..self.d)
            .map(|i| cols.iter().map(|&j| self.entry(i, j)).collect())
            .collect();
        WeightMatrix::new(rows)
    }

    /// Entrywise translation, used for the nonnegativity shift.
    pub fn shifted(&self, delta: i64) -> Result<WeightMatrix> {
        let rows = (0..self.d)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|&v| {
                        v.checked_add(delta)
                            .ok_or_else(|| Error::input("weight shift overflows i64"))
                    })
                    .collect::<Result<Vec<i64>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        WeightMatrix::new(rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profile_sums_rows() {
        let w = WeightMatrix::new(vec![vec![1, 2, 3]]).unwrap();
        assert_eq!(w.profile(&[0, 1]).unwrap(), Profile(vec![3]));
        let w2 = WeightMatrix::new(vec![vec![1, 1, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(w2.profile(&[0, 2]).unwrap(), Profile(vec![1, 1]));
        assert_eq!(w2.profile(&[]).unwrap(), Profile::zero(2));
    }

    #[test]
    fn unit_vector_rows_pick_out_membership() {
        // d = 3 unit-vector rows: profile of {1} is the indicator (0,1,0).
        let w = WeightMatrix::new(vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(w.profile(&[1]).unwrap(), Profile(vec![0, 1, 0]));
    }

    #[test]
    fn value_set_is_sorted_distinct() {
        let w = WeightMatrix::new(vec![vec![3, 1, 3], vec![1, 0, 3]]).unwrap();
        assert_eq!(w.value_set(&[0, 1, 2]).unwrap(), vec![0, 1, 3]);
        assert_eq!(w.value_set(&[0]).unwrap(), vec![1, 3]);
    }

    #[test]
    fn out_of_range_subset_is_rejected() {
        let w = WeightMatrix::new(vec![vec![1, 2]]).unwrap();
        assert!(w.profile(&[2]).is_err());
    }

    #[test]
    fn profiles_order_lexicographically() {
        assert!(Profile(vec![1, 5]) < Profile(vec![2, 0]));
        assert!(Profile(vec![1, 0]) < Profile(vec![1, 1]));
    }
}

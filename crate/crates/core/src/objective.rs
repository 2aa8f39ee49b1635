//! Objective functions reached through a comparison oracle.
//!
//! Every built-in family evaluates profiles to an exact comparison key
//! (a rational, or "absent" for table entries without a rank), so the
//! induced relation is a total preorder by construction. Roots are never
//! taken: the `l_q` families compare the q-th power sums, which is
//! order-equivalent.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{rat_from_i128, rat_pow, Rat};
use crate::weights::Profile;

/// Exponent of an `l_q` comparison; `Infinity` compares maxima.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QExp {
    Finite(u32),
    Infinity,
}

#[derive(Clone, Debug)]
pub enum Objective {
    /// `f(y) = y_1`; requires d = 1.
    Identity,
    /// `f(y) = sum_i pi_i y_i`.
    Linear { pi: Vec<Rat> },
    /// `f(y) = max_i y_i`.
    Max,
    /// Compared via `sum_i |pi_i y_i|^q` (or the max for q = infinity).
    Lq { q: QExp, pi: Vec<Rat> },
    /// `f(y) = sum_i (y_i - c_i)^2`.
    ShiftedSquare { center: Vec<i128> },
    /// Explicit preorder: profiles map to ranks; profiles missing from
    /// the table compare above every listed one.
    Table { entries: BTreeMap<Vec<i128>, i64> },
    /// `f'(y) = f(y - delta)`, the wrapper produced by the
    /// nonnegativity shift.
    Shifted {
        inner: Box<Objective>,
        delta: Vec<i128>,
    },
    /// `f'(y) = f(y / divisor)`, used to fold the 1/m aberration scale
    /// into the oracle while keeping the weights integral.
    Scaled { inner: Box<Objective>, divisor: u32 },
}

/// Comparison key: totally ordered with `Absent` above every value.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Key {
    Value(Rat),
    Absent,
}

impl Key {
    fn cmp_key(&self, other: &Key) -> Ordering {
        match (self, other) {
            (Key::Value(a), Key::Value(b)) => a.cmp(b),
            (Key::Value(_), Key::Absent) => Ordering::Less,
            (Key::Absent, Key::Value(_)) => Ordering::Greater,
            (Key::Absent, Key::Absent) => Ordering::Equal,
        }
    }
}

impl Objective {
    pub fn linear_ones(d: usize) -> Objective {
        Objective::Linear {
            pi: vec![rat_from_i128(1); d],
        }
    }

    pub fn lq_ones(q: QExp, d: usize) -> Objective {
        Objective::Lq {
            q,
            pi: vec![rat_from_i128(1); d],
        }
    }

    pub fn shifted(self, delta: Vec<i128>) -> Objective {
        Objective::Shifted {
            inner: Box::new(self),
            delta,
        }
    }

    pub fn scaled(self, divisor: u32) -> Objective {
        Objective::Scaled {
            inner: Box::new(self),
            divisor,
        }
    }

    /// Validates parameter shapes against the profile dimension `d`.
    pub fn validate(&self, d: usize) -> Result<()> {
        match self {
            Objective::Identity => {
                if d != 1 {
                    return Err(Error::input(format!(
                        "identity objective requires d = 1, got d = {d}"
                    )));
                }
            }
            Objective::Linear { pi } => {
                if pi.len() != d {
                    return Err(Error::input(format!(
                        "linear objective has {} coefficients for d = {d}",
                        pi.len()
                    )));
                }
            }
            Objective::Max => {
                if d == 0 {
                    return Err(Error::input("max objective requires d >= 1"));
                }
            }
            Objective::Lq { q, pi } => {
                if pi.len() != d {
                    return Err(Error::input(format!(
                        "lq objective has {} coefficients for d = {d}",
                        pi.len()
                    )));
                }
                if let QExp::Finite(0) = q {
                    return Err(Error::input("lq objective requires q >= 1"));
                }
            }
            Objective::ShiftedSquare { center } => {
                if center.len() != d {
                    return Err(Error::input(format!(
                        "shifted-square center has dimension {} for d = {d}",
                        center.len()
                    )));
                }
            }
            Objective::Table { entries } => {
                if let Some(bad) = entries.keys().find(|k| k.len() != d) {
                    return Err(Error::input(format!(
                        "table profile {bad:?} has dimension {} for d = {d}",
                        bad.len()
                    )));
                }
            }
            Objective::Shifted { inner, delta } => {
                if delta.len() != d {
                    return Err(Error::input("shift delta dimension mismatch"));
                }
                inner.validate(d)?;
            }
            Objective::Scaled { inner, divisor } => {
                if *divisor == 0 {
                    return Err(Error::input("scale divisor must be nonzero"));
                }
                if inner.contains_table() {
                    return Err(Error::input(
                        "a table objective cannot be combined with rational scaling",
                    ));
                }
                inner.validate(d)?;
            }
        }
        Ok(())
    }

    fn contains_table(&self) -> bool {
        match self {
            Objective::Table { .. } => true,
            Objective::Shifted { inner, .. } | Objective::Scaled { inner, .. } => {
                inner.contains_table()
            }
            _ => false,
        }
    }

    fn key(&self, coords: &[Rat]) -> Result<Key> {
        match self {
            Objective::Identity => Ok(Key::Value(coords[0].clone())),
            Objective::Linear { pi } => {
                let mut acc = Rat::zero();
                for (p, y) in pi.iter().zip(coords) {
                    acc += p * y;
                }
                Ok(Key::Value(acc))
            }
            Objective::Max => {
                let max = coords.iter().max().expect("validated d >= 1");
                Ok(Key::Value(max.clone()))
            }
            Objective::Lq { q, pi } => match q {
                QExp::Finite(q) => {
                    let mut acc = Rat::zero();
                    for (p, y) in pi.iter().zip(coords) {
                        acc += rat_pow(&(p * y).abs(), *q);
                    }
                    Ok(Key::Value(acc))
                }
                QExp::Infinity => {
                    let max = pi
                        .iter()
                        .zip(coords)
                        .map(|(p, y)| (p * y).abs())
                        .max()
                        .expect("validated d >= 1");
                    Ok(Key::Value(max))
                }
            },
            Objective::ShiftedSquare { center } => {
                let mut acc = Rat::zero();
                for (c, y) in center.iter().zip(coords) {
                    let diff = y - rat_from_i128(*c);
                    acc += &diff * &diff;
                }
                Ok(Key::Value(acc))
            }
            Objective::Table { entries } => {
                let ints = coords
                    .iter()
                    .map(crate::exact::rat_to_i128)
                    .collect::<Result<Vec<i128>>>()
                    .map_err(|_| {
                        Error::input("table objective queried at a non-integer profile")
                    })?;
                Ok(match entries.get(&ints) {
                    Some(&rank) => Key::Value(rat_from_i128(i128::from(rank))),
                    None => Key::Absent,
                })
            }
            Objective::Shifted { inner, delta } => {
                let shifted: Vec<Rat> = coords
                    .iter()
                    .zip(delta)
                    .map(|(y, &d)| y - rat_from_i128(d))
                    .collect();
                inner.key(&shifted)
            }
            Objective::Scaled { inner, divisor } => {
                let div = rat_from_i128(i128::from(*divisor));
                let scaled: Vec<Rat> = coords.iter().map(|y| y / &div).collect();
                inner.key(&scaled)
            }
        }
    }

    fn profile_key(&self, profile: &Profile) -> Result<Key> {
        let coords: Vec<Rat> = profile.coords().iter().map(|&v| rat_from_i128(v)).collect();
        self.key(&coords)
    }

    /// The comparison oracle: total preorder on profiles.
    pub fn compare(&self, x: &Profile, y: &Profile) -> Result<Ordering> {
        if x.dim() != y.dim() {
            return Err(Error::input("profiles of different dimension compared"));
        }
        self.validate(x.dim())?;
        Ok(self.profile_key(x)?.cmp_key(&self.profile_key(y)?))
    }

    /// The raw oracle primitive `f(x) <= f(y)`.
    pub fn le(&self, x: &Profile, y: &Profile) -> Result<bool> {
        Ok(self.compare(x, y)? != Ordering::Greater)
    }

    /// Exact numeric value where the family defines one. For `l_q` this
    /// is the q-th power sum (the comparison key), documented as such.
    pub fn value(&self, profile: &Profile) -> Result<Option<Rat>> {
        self.validate(profile.dim())?;
        Ok(match self.profile_key(profile)? {
            Key::Value(v) => Some(v),
            Key::Absent => None,
        })
    }
}

/// Objective comparison refined by the lexicographic profile order: a
/// strict total order implementing the "lexicographically smallest
/// optimal profile" tie-break rule.
pub fn refined_cmp(f: &Objective, x: &Profile, y: &Profile) -> Result<Ordering> {
    Ok(f.compare(x, y)?.then_with(|| x.cmp(y)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coords: &[i128]) -> Profile {
        Profile(coords.to_vec())
    }

    #[test]
    fn identity_orders_by_single_coordinate() {
        let f = Objective::Identity;
        assert_eq!(f.compare(&p(&[3]), &p(&[5])).unwrap(), Ordering::Less);
        assert!(f.le(&p(&[3]), &p(&[3])).unwrap());
        assert!(f.validate(2).is_err());
    }

    #[test]
    fn linf_compares_maxima_of_magnitudes() {
        let f = Objective::lq_ones(QExp::Infinity, 2);
        assert_eq!(
            f.compare(&p(&[4, 4]), &p(&[3, 5])).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            f.compare(&p(&[-5, 0]), &p(&[3, 5])).unwrap(),
            Ordering::Equal
        );
    }

    #[test]
    fn l1_compares_power_sums() {
        let f = Objective::lq_ones(QExp::Finite(1), 2);
        assert_eq!(f.compare(&p(&[2, 2]), &p(&[5, 0])).unwrap(), Ordering::Less);
        assert_eq!(
            f.value(&p(&[2, -3])).unwrap().unwrap(),
            rat_from_i128(5)
        );
    }

    #[test]
    fn shifted_square_penalizes_distance_from_center() {
        let f = Objective::ShiftedSquare { center: vec![1] };
        assert_eq!(f.compare(&p(&[1]), &p(&[0])).unwrap(), Ordering::Less);
        assert_eq!(f.compare(&p(&[0]), &p(&[2])).unwrap(), Ordering::Equal);
    }

    #[test]
    fn shift_wrapper_translates_queries() {
        // f'(y) = f(y - 4) with f = (y - 1)^2: minimized at y = 5.
        let f = Objective::ShiftedSquare { center: vec![1] }.shifted(vec![4]);
        assert_eq!(f.compare(&p(&[5]), &p(&[4])).unwrap(), Ordering::Less);
    }

    #[test]
    fn scale_wrapper_divides_coordinates() {
        let f = Objective::linear_ones(2).scaled(4);
        assert_eq!(
            f.value(&p(&[2, 2])).unwrap().unwrap(),
            crate::exact::parse_rational("1").unwrap()
        );
        assert!(Objective::Table {
            entries: BTreeMap::new()
        }
        .scaled(2)
        .validate(1)
        .is_err());
    }

    #[test]
    fn table_ranks_and_missing_entries() {
        let mut entries = BTreeMap::new();
        entries.insert(vec![0i128], 5i64);
        entries.insert(vec![1i128], 2i64);
        let f = Objective::Table { entries };
        assert_eq!(f.compare(&p(&[1]), &p(&[0])).unwrap(), Ordering::Less);
        // Missing profiles compare above all listed ones, and equal to
        // each other.
        assert_eq!(f.compare(&p(&[9]), &p(&[0])).unwrap(), Ordering::Greater);
        assert_eq!(f.compare(&p(&[9]), &p(&[8])).unwrap(), Ordering::Equal);
        assert_eq!(f.value(&p(&[9])).unwrap(), None);
    }

    #[test]
    fn refined_order_breaks_ties_lexicographically() {
        let f = Objective::lq_ones(QExp::Infinity, 2);
        assert_eq!(
            refined_cmp(&f, &p(&[3, 5]), &p(&[5, 3])).unwrap(),
            Ordering::Less
        );
    }

    #[test]
    fn preorder_laws_on_sample_triples() {
        let fs = [
            Objective::linear_ones(2),
            Objective::Max,
            Objective::lq_ones(QExp::Finite(2), 2),
            Objective::ShiftedSquare { center: vec![1, -1] },
        ];
        let pts = [p(&[0, 0]), p(&[1, -1]), p(&[-2, 3]), p(&[1, 1])];
        for f in &fs {
            for a in &pts {
                assert!(f.le(a, a).unwrap());
                for b in &pts {
                    let ab = f.le(a, b).unwrap();
                    let ba = f.le(b, a).unwrap();
                    assert!(ab || ba, "totality");
                    for c in &pts {
                        if ab && f.le(b, c).unwrap() {
                            assert!(f.le(a, c).unwrap(), "transitivity");
                        }
                    }
                }
            }
        }
    }
}

//! Resource guard rails for the solvers.
//!
//! The solver complexity bounds assume the weight dimension and value
//! count are fixed; these caps make the desk-scale enforcement explicit
//! instead of letting a bad instance run forever.

/// Caps checked before any expensive enumeration starts. A violated cap
/// produces [`crate::Error::Budget`] naming the cap that fired.
#[derive(Clone, Debug)]
pub struct Budget {
    /// Combinatorial solver: maximum admitted candidate count for both
    /// the profile superset (`(m+1)^(p*d)`) and the selector-profile
    /// enumeration (`(m+1)^(p^d)`).
    pub candidate_cap: u64,
    /// Algebraic solver: maximum number of evaluation points `p^d`.
    pub evaluation_point_cap: u64,
    /// Algebraic solver: maximum predicted bit length of the determinant
    /// values fed to the interpolation.
    pub determinant_bit_cap: u64,
    /// Largest ground set accepted by the brute-force reference routines.
    pub brute_force_cap: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            candidate_cap: 1_000_000,
            evaluation_point_cap: 2_500,
            determinant_bit_cap: 1_000_000,
            brute_force_cap: 16,
        }
    }
}

impl Budget {
    /// `base^exp` capped: returns `None` when the power exceeds `cap`.
    pub fn checked_pow_within(base: u64, exp: u32, cap: u64) -> Option<u64> {
        let mut acc: u64 = 1;
        for _ in 0..exp {
            acc = acc.checked_mul(base)?;
            if acc > cap {
                return None;
            }
        }
        Some(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pow_cap_detects_blowup() {
        assert_eq!(Budget::checked_pow_within(5, 4, 1000), Some(625));
        assert_eq!(Budget::checked_pow_within(5, 9, 1_000_000), None);
        assert_eq!(Budget::checked_pow_within(10, 0, 1), Some(1));
        // Overflowing u64 entirely also counts as exceeding the cap.
        assert_eq!(Budget::checked_pow_within(u64::MAX, 2, u64::MAX), None);
    }
}

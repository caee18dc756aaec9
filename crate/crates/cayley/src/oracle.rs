//! Brute-force ground truth for generation questions.
//!
//! Everything here goes through subgroup closure only, independent of
//! the graph machinery, so the two routes can be played against each
//! other in tests.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, GeneratorSet};

/// Conservative ceiling on estimated table lookups before the
/// brute-force search refuses to run.
const CHECK_BUDGET: u128 = 100_000_000;

/// Whether the subset generates the whole group, decided by closure.
pub fn is_generating(group: &FiniteGroup, gens: &GeneratorSet) -> bool {
    group.closure(gens).order() == group.order()
}

/// A minimum generating set found by exhaustive search.
#[derive(Debug, Clone)]
pub struct RankCertificate {
    pub rank: usize,
    /// Lexicographically first generating subset of that size.
    pub witness: GeneratorSet,
    /// True when every smaller subset was enumerated and failed.
    pub exhausted_below: bool,
}

/// Finds the rank of the group by enumerating subsets of the
/// non-identity elements in increasing size, lexicographically within
/// each size. The identity is skipped because adding it never changes a
/// closure.
///
/// Refuses with a resource error when the estimated work for the next
/// size exceeds a fixed budget, or when `size_cap` is exhausted without
/// finding a generating subset.
pub fn min_generating_set_bruteforce(
    group: &FiniteGroup,
    size_cap: usize,
) -> Result<RankCertificate> {
    if is_generating(group, &GeneratorSet::new()) {
        return Ok(RankCertificate {
            rank: 0,
            witness: GeneratorSet::new(),
            exhausted_below: true,
        });
    }
    let pool: Vec<Elem> = group.elements().skip(1).collect();
    let n = group.order() as u128;
    let mut estimated: u128 = 0;
    for size in 1..=size_cap.min(pool.len()) {
        // subsets of this size times the closure cost n*|A|
        estimated = estimated.saturating_add(
            binomial(pool.len() as u128, size as u128).saturating_mul(n * size as u128),
        );
        if estimated > CHECK_BUDGET {
            return Err(Error::Resource(format!(
                "estimated work passes the budget at subset size {size}; \
                 all subsets of size below {size} were checked and none generates"
            )));
        }
        for combo in pool.iter().copied().combinations(size) {
            let candidate: GeneratorSet = combo.into_iter().collect();
            if is_generating(group, &candidate) {
                return Ok(RankCertificate {
                    rank: size,
                    witness: candidate,
                    exhausted_below: true,
                });
            }
        }
    }
    Err(Error::Resource(format!(
        "no generating subset of size at most {size_cap}; raise the cap"
    )))
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result: u128 = 1;
    for i in 0..k {
        result = result.saturating_mul(n - i) / (i + 1);
    }
    result
}

//! Segmented sieve of Eratosthenes and prime-power enumeration.
//!
//! The prime sums walk windows `[x e^{-R}, x e^{R}]` repeatedly (one window
//! per quadrature node in the moment integrals), so primes are sieved once up
//! to the maximum needed bound and kept in a shared table with range access.

const SEGMENT: usize = 1 << 20; // odd numbers per segment

/// All primes `<= limit`, ascending.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let mut primes = vec![2u64];
    if limit < 3 {
        return primes;
    }
    // Base primes up to sqrt(limit) by a simple odd sieve.
    let root = (limit as f64).sqrt() as u64 + 1;
    let base = small_odd_primes(root);
    // Segmented sieve over odd numbers in (2, limit].
    let mut low = 3u64;
    let mut mask = vec![false; SEGMENT];
    while low <= limit {
        // odd upper bound; the segment covers SEGMENT odd numbers [low, low + 2(SEGMENT-1)]
        let mut high = (low + 2 * (SEGMENT as u64 - 1)).min(limit);
        if high % 2 == 0 {
            high -= 1;
        }
        mask.iter_mut().for_each(|b| *b = false);
        let n_in_seg = ((high - low) / 2 + 1) as usize;
        for &p in &base {
            if p * p > high {
                break;
            }
            // first odd multiple of p that is >= max(p*p, low)
            let mut start = p * p;
            if start < low {
                let q = (low + p - 1) / p;
                start = q * p;
                if start % 2 == 0 {
                    start += p;
                }
            }
            let mut m = start;
            while m <= high {
                mask[((m - low) / 2) as usize] = true;
                m += 2 * p;
            }
        }
        for (i, &composite) in mask.iter().enumerate().take(n_in_seg) {
            if !composite {
                let n = low + 2 * i as u64;
                if n <= limit {
                    primes.push(n);
                }
            }
        }
        low = high + 2;
    }
    primes
}

fn small_odd_primes(limit: u64) -> Vec<u64> {
    let mut is_comp = vec![false; (limit as usize) / 2 + 1]; // index i <-> 2i+1
    let mut primes = Vec::new();
    let mut n = 3u64;
    while n <= limit {
        if !is_comp[(n / 2) as usize] {
            primes.push(n);
            let mut m = n * n;
            while m <= limit {
                is_comp[(m / 2) as usize] = true;
                m += 2 * n;
            }
        }
        n += 2;
    }
    primes
}

/// Shared ascending prime table with range access.
#[derive(Debug, Clone)]
pub struct PrimeTable {
    limit: u64,
    primes: Vec<u64>,
}

impl PrimeTable {
    pub fn new(limit: u64) -> Self {
        Self { limit, primes: primes_up_to(limit) }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// Primes in `[lo, hi]` as a subslice.
    pub fn range(&self, lo: u64, hi: u64) -> &[u64] {
        let a = self.primes.partition_point(|&p| p < lo);
        let b = self.primes.partition_point(|&p| p <= hi.min(self.limit));
        &self.primes[a..b]
    }

    pub fn is_prime(&self, n: u64) -> bool {
        debug_assert!(n <= self.limit);
        self.primes.binary_search(&n).is_ok()
    }
}

/// Prime powers `p^m <= limit` with `m >= 2`, as (p, m, p^m), ascending in p^m.
pub fn prime_powers_above_first(table: &PrimeTable, limit: u64) -> Vec<(u64, u32, u64)> {
    let mut out = Vec::new();
    for &p in table.range(2, (limit as f64).sqrt() as u64 + 1) {
        let mut pm = p * p;
        let mut m = 2u32;
        loop {
            if pm > limit {
                break;
            }
            out.push((p, m, pm));
            if pm > limit / p {
                break;
            }
            pm *= p;
            m += 1;
        }
    }
    out.sort_by_key(|&(_, _, pm)| pm);
    out
}

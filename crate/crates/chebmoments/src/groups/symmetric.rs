//! Symmetric-group combinatorics: partitions, hook lengths, and the
//! Murnaghan-Nakayama recursion for character values, plus an independent
//! brute-force table builder (permutation characters of Young subgroups and
//! Gram-Schmidt extraction) used as a cross-check oracle for small n.

use std::collections::HashMap;

use super::factorial;

/// Default cap on n for symmetric groups (p(12) = 77 characters).
pub const MAX_SYMMETRIC_N: u32 = 12;

/// All partitions of n in descending lexicographic order (which refines the
/// dominance order downward: lex-earlier partitions dominate).
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        let mut k = max.min(rem);
        while k >= 1 {
            cur.push(k);
            rec(rem - k, k, cur, out);
            cur.pop();
            k -= 1;
        }
    }
    rec(n, n, &mut cur, &mut out);
    out
}

/// Exact partition count p(n).
pub fn partition_count(n: u32) -> u64 {
    // Euler pentagonal recurrence
    let n = n as usize;
    let mut p = vec![0u64; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut acc: i128 = 0;
        let mut k = 1i64;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 0 { -1i128 } else { 1i128 };
            acc += sign * p[m - g1] as i128;
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= m {
                acc += sign * p[m - g2] as i128;
            }
            k += 1;
        }
        p[m] = acc as u64;
    }
    p[n]
}

/// Index of a partition in the `partitions(n)` ordering.
pub fn partition_index(lam: &[u32], n: u32) -> usize {
    partitions(n)
        .iter()
        .position(|p| p.as_slice() == lam)
        .expect("partition of the wrong n")
}

/// z_mu = prod_i i^{c_i} c_i!  (centralizer order of the class of cycle type mu).
pub fn centralizer_order(mu: &[u32]) -> u64 {
    let mut counts: HashMap<u32, u64> = HashMap::new();
    for &part in mu {
        *counts.entry(part).or_insert(0) += 1;
    }
    counts
        .iter()
        .map(|(&len, &c)| (len as u64).pow(c as u32) * factorial(c))
        .product()
}

/// Canonical permutation with the given cycle type (cycles on consecutive blocks).
pub fn canonical_perm(mu: &[u32], n: u32) -> Vec<u8> {
    let mut perm: Vec<u8> = (0..n as u8).collect();
    let mut start = 0u32;
    for &len in mu {
        // cycle (start, start+1, ..., start+len-1)
        for i in 0..len {
            perm[(start + i) as usize] = (start + (i + 1) % len) as u8;
        }
        start += len;
    }
    perm
}

/// Cycle type of a permutation, as a descending partition.
pub fn cycle_type(perm: &[u8]) -> Vec<u32> {
    let n = perm.len();
    let mut seen = vec![false; n];
    let mut lens = Vec::new();
    for i in 0..n {
        if seen[i] {
            continue;
        }
        let mut len = 0u32;
        let mut j = i;
        while !seen[j] {
            seen[j] = true;
            j = perm[j] as usize;
            len += 1;
        }
        lens.push(len);
    }
    lens.sort_unstable_by(|a, b| b.cmp(a));
    lens
}

/// Degree of the irreducible indexed by lam, by the hook-length formula.
pub fn hook_degree(lam: &[u32]) -> u64 {
    let n: u32 = lam.iter().sum();
    let mut hooks: u128 = 1;
    for (i, &row) in lam.iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = lam[i + 1..].iter().filter(|&&r| r > j).count() as u32;
            hooks *= (arm + leg + 1) as u128;
        }
    }
    (factorial(n as u64) as u128 / hooks) as u64
}

/// Character value chi_lam(mu) by the Murnaghan-Nakayama rule, via
/// beta-numbers: removing a border strip of length r is subtracting r from a
/// beta-number while keeping the set property; the sign is (-1)^{#jumped}.
pub fn mn_character(lam: &[u32], mu: &[u32]) -> i64 {
    let mut memo: HashMap<(Vec<u32>, usize), i64> = HashMap::new();
    fn betas(lam: &[u32]) -> Vec<u32> {
        // pad to len = sum so removals never run out of rows
        let k = lam.len().max(1);
        let mut b: Vec<u32> = (0..k)
            .map(|i| lam.get(i).copied().unwrap_or(0) + (k - 1 - i) as u32)
            .collect();
        b.sort_unstable();
        b
    }
    fn lam_of(betas: &[u32]) -> Vec<u32> {
        // invert, dropping zero parts; betas ascending
        let k = betas.len();
        let mut lam: Vec<u32> = betas
            .iter()
            .rev()
            .enumerate()
            .map(|(i, &b)| b - (k - 1 - i) as u32)
            .collect();
        lam.retain(|&p| p > 0);
        lam
    }
    fn rec(
        b: &[u32],
        mu: &[u32],
        pos: usize,
        memo: &mut HashMap<(Vec<u32>, usize), i64>,
    ) -> i64 {
        if pos == mu.len() {
            return 1;
        }
        let key = (lam_of(b), pos);
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let r = mu[pos];
        let mut total = 0i64;
        for (i, &bi) in b.iter().enumerate() {
            if bi >= r && !b.contains(&(bi - r)) {
                // strip removal: replace bi by bi-r; sign = #betas strictly
                // between bi-r and bi
                let jumped =
                    b.iter().filter(|&&x| x > bi - r && x < bi).count();
                let sign = if jumped % 2 == 0 { 1 } else { -1 };
                let mut nb = b.to_vec();
                nb[i] = bi - r;
                nb.sort_unstable();
                total += sign * rec(&nb, mu, pos + 1, memo);
            }
        }
        memo.insert(key, total);
        total
    }
    // process longest parts first (fewer branches)
    let mut mu_sorted = mu.to_vec();
    mu_sorted.sort_unstable_by(|a, b| b.cmp(a));
    rec(&betas(lam), &mu_sorted, 0, &mut memo)
}

/// Brute-force character table of S_n (n <= 6), independent of the MN rule:
/// build the permutation characters of Young subgroups by orbit counting over
/// cycle types, then peel off irreducibles in lex order. Returns rows indexed
/// like `partitions(n)` and columns like the conjugacy classes.
pub fn brute_force_table(n: u32) -> Vec<Vec<i64>> {
    assert!(n <= 6, "brute-force table oracle limited to n <= 6");
    let parts = partitions(n);
    let classes = &parts; // cycle types, same ordering
    let nclass = classes.len();

    // Permutation character phi_lam(mu): number of ways to distribute the
    // cycles of a permutation of type mu into ordered blocks of sizes lam_i.
    fn phi(lam: &[u32], mu: &[u32]) -> i64 {
        fn rec(cycles: &[u32], loads: &mut Vec<u32>, lam: &[u32]) -> i64 {
            match cycles.split_first() {
                None => 1,
                Some((&c, rest)) => {
                    let mut total = 0;
                    for b in 0..lam.len() {
                        if loads[b] + c <= lam[b] {
                            loads[b] += c;
                            total += rec(rest, loads, lam);
                            loads[b] -= c;
                        }
                    }
                    total
                }
            }
        }
        rec(mu, &mut vec![0; lam.len()], lam)
    }

    let phis: Vec<Vec<i64>> = parts
        .iter()
        .map(|lam| classes.iter().map(|mu| phi(lam, mu)).collect())
        .collect();

    // inner product over classes with weights |C|/n!
    let nfact = factorial(n as u64) as i64;
    let weights: Vec<i64> = classes
        .iter()
        .map(|mu| nfact / centralizer_order(mu) as i64)
        .collect();
    let inner = |a: &[i64], b: &[i64]| -> i64 {
        let s: i64 = a
            .iter()
            .zip(b)
            .zip(&weights)
            .map(|((&x, &y), &w)| w * x * y)
            .sum();
        assert_eq!(s % nfact, 0, "non-integral inner product");
        s / nfact
    };

    // Peel: in lex order, chi_lam = phi_lam - sum of already-extracted
    // constituents (Kostka triangularity: only earlier lam' appear).
    let mut chars: Vec<Vec<i64>> = Vec::with_capacity(nclass);
    for phi_lam in &phis {
        let mut row = phi_lam.clone();
        for prev in &chars {
            let m = inner(&row, prev);
            for (r, p) in row.iter_mut().zip(prev) {
                *r -= m * p;
            }
        }
        assert_eq!(inner(&row, &row), 1, "peeled row is not irreducible");
        chars.push(row);
    }
    chars
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(partitions(6).len(), 11);
        for n in 1..=12u32 {
            assert_eq!(partitions(n).len() as u64, partition_count(n));
        }
        assert_eq!(partition_count(12), 77);
    }

    #[test]
    fn class_sizes_sum_to_order() {
        for n in 2..=8u32 {
            let total: u64 = partitions(n)
                .iter()
                .map(|mu| factorial(n as u64) / centralizer_order(mu))
                .sum();
            assert_eq!(total, factorial(n as u64));
        }
    }

    #[test]
    fn hook_degrees() {
        // (n-1,1) has degree n-1; (n) and (1^n) have degree 1
        for n in 3..=10u32 {
            assert_eq!(hook_degree(&[n - 1, 1]), (n - 1) as u64);
            assert_eq!(hook_degree(&[n]), 1);
            assert_eq!(hook_degree(&vec![1; n as usize]), 1);
        }
        // S_4 standard: degrees 1,3,2,3,1
        let degs: Vec<u64> = partitions(4).iter().map(|l| hook_degree(l)).collect();
        assert_eq!(degs, vec![1, 3, 2, 3, 1]);
    }

    #[test]
    fn mn_matches_hook_degree_at_identity() {
        for n in 2..=8u32 {
            let id = vec![1u32; n as usize];
            for lam in partitions(n) {
                assert_eq!(
                    mn_character(&lam, &id),
                    hook_degree(&lam) as i64,
                    "lam={lam:?}"
                );
            }
        }
    }

    #[test]
    fn mn_known_s3_values() {
        // standard 2-dim character of S_3: values 2, 0, -1 on [1^3],[2,1],[3]
        assert_eq!(mn_character(&[2, 1], &[1, 1, 1]), 2);
        assert_eq!(mn_character(&[2, 1], &[2, 1]), 0);
        assert_eq!(mn_character(&[2, 1], &[3]), -1);
        // sign character
        assert_eq!(mn_character(&[1, 1, 1], &[2, 1]), -1);
        assert_eq!(mn_character(&[1, 1, 1], &[3]), 1);
    }

    #[test]
    fn brute_force_matches_mn_small_n() {
        for n in 2..=6u32 {
            let parts = partitions(n);
            let bf = brute_force_table(n);
            // the peel order may assign rows in lex order of lam; MN indexes
            // rows the same way, so compare cell by cell
            for (i, lam) in parts.iter().enumerate() {
                for (j, mu) in parts.iter().enumerate() {
                    assert_eq!(
                        bf[i][j],
                        mn_character(lam, mu),
                        "n={n} lam={lam:?} mu={mu:?}"
                    );
                }
            }
        }
    }
}

//! Integer sieves: squarefree and k-powerful indicators, exact k-powerful
//! counting, divisor counts with the explicit `t(n) ≤ c·n^ε` bound, and a
//! numeric probe of Dirichlet series partial sums.

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SieveKind {
    Squarefree,
    Powerful(u32),
}

/// Indicator table over `1..=limit`. Index 0 is unused and always `false`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SieveTable {
    limit: usize,
    kind: SieveKind,
    flags: Vec<bool>,
}

impl SieveTable {
    pub fn limit(&self) -> usize {
        self.limit
    }

    pub fn kind(&self) -> SieveKind {
        self.kind
    }

    pub fn get(&self, n: usize) -> bool {
        self.flags[n]
    }

    pub fn flags(&self) -> &[bool] {
        &self.flags
    }

    /// Number of flagged `n ≤ x`.
    pub fn count_upto(&self, x: usize) -> usize {
        self.flags[..=x.min(self.limit)].iter().filter(|&&f| f).count()
    }
}

/// Smallest prime factor of every `n ≤ limit` (`spf[0] = spf[1] = 0`).
pub fn smallest_prime_factors(limit: usize) -> Vec<u32> {
    let mut spf = vec![0u32; limit + 1];
    for i in 2..=limit {
        if spf[i] == 0 {
            let mut j = i;
            while j <= limit {
                if spf[j] == 0 {
                    spf[j] = i as u32;
                }
                j += i;
            }
        }
    }
    spf
}

pub fn primes_upto(limit: usize) -> Vec<usize> {
    let mut composite = vec![false; limit + 1];
    let mut primes = Vec::new();
    for i in 2..=limit {
        if !composite[i] {
            primes.push(i);
            let mut j = i * i;
            while j <= limit {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

/// Strikes multiples of every prime square.
pub fn squarefree_sieve(limit: usize) -> SieveTable {
    let mut flags = vec![true; limit + 1];
    flags[0] = false;
    for p in primes_upto(integer_root(limit as u64, 2) as usize) {
        let sq = p * p;
        let mut j = sq;
        while j <= limit {
            flags[j] = false;
            j += sq;
        }
    }
    SieveTable { limit, kind: SieveKind::Squarefree, flags }
}

/// Indicator of k-powerful numbers: every prime divides with exponent ≥ k.
pub fn powerful_sieve(k: u32, limit: usize) -> SieveTable {
    let spf = smallest_prime_factors(limit);
    let mut flags = vec![false; limit + 1];
    for (n, flag) in flags.iter_mut().enumerate().skip(1) {
        *flag = min_exponent(n, &spf) >= k;
    }
    SieveTable { limit, kind: SieveKind::Powerful(k), flags }
}

fn min_exponent(mut n: usize, spf: &[u32]) -> u32 {
    let mut min = u32::MAX;
    while n > 1 {
        let p = spf[n] as usize;
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        min = min.min(e);
    }
    min
}

/// Largest `r` with `r^k ≤ x`.
pub fn integer_root(x: u64, k: u32) -> u64 {
    if k == 1 || x <= 1 {
        return x;
    }
    let mut r = (x as f64).powf(1.0 / k as f64).round() as u64;
    let pow_le = |r: u64| r.checked_pow(k).is_some_and(|v| v <= x);
    while r > 0 && !pow_le(r) {
        r -= 1;
    }
    while pow_le(r + 1) {
        r += 1;
    }
    r
}

/// Number of k-powerful `n ≤ x`.
///
/// Every k-powerful number factors uniquely as
/// `m^k · ∏_{j=k+1}^{2k−1} b_j^j` with the `b_j` squarefree and pairwise
/// coprime, so the count is a sum of `⌊(x / ∏ b_j^j)^{1/k}⌋` over admissible
/// tuples. No integer in `1..=x` is factored.
pub fn powerful_count(k: u32, x: u64) -> u64 {
    assert!(k >= 1, "k must be positive");
    if x == 0 {
        return 0;
    }
    if k == 1 {
        return x;
    }
    // b_{k+1} ≤ x^{1/(k+1)} bounds every prime that can occur in a b_j.
    let bmax = integer_root(x, k + 1) as usize;
    let primes = primes_upto(bmax);
    let mut total = 0;
    let exps: Vec<u32> = (k + 1..2 * k).collect();
    assign_cofactors(&primes, 0, &exps, x, k, &mut total);
    total
}

// Walk primes in increasing order; each prime is either skipped or placed in
// exactly one b_j (with exponent j). `budget` is x divided by the product so far.
fn assign_cofactors(primes: &[usize], from: usize, exps: &[u32], budget: u64, k: u32, total: &mut u64) {
    *total += integer_root(budget, k);
    for (i, &p) in primes.iter().enumerate().skip(from) {
        let p = p as u64;
        let Some(smallest) = p.checked_pow(exps[0]) else { break };
        if smallest > budget {
            break;
        }
        for &j in exps {
            match p.checked_pow(j) {
                Some(pj) if pj <= budget => assign_cofactors(primes, i + 1, exps, budget / pj, k, total),
                _ => break,
            }
        }
    }
}

/// Number of divisors `t(n)` for `n ≤ limit` (index 0 unused).
pub fn divisor_counts(limit: usize) -> Vec<u32> {
    let mut t = vec![0u32; limit + 1];
    for d in 1..=limit {
        let mut m = d;
        while m <= limit {
            t[m] += 1;
            m += d;
        }
    }
    t
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DivisorBound {
    pub max_ratio: f64,
    pub argmax: usize,
    /// `exp(2^{1/ε} / (ε·log 2))`.
    pub bound: f64,
    pub holds: bool,
}

/// Compares `max_{n ≤ limit} t(n)/n^ε` with the explicit constant
/// `exp(2^{1/ε} / (ε log 2))` of the `t(n) ≤ c·n^ε` estimate.
pub fn divisor_bound_check(limit: usize, epsilon: f64) -> DivisorBound {
    assert!(epsilon > 0.0 && limit >= 1);
    let t = divisor_counts(limit);
    let (argmax, max_ratio) = (1..=limit)
        .map(|n| (n, t[n] as f64 / (n as f64).powf(epsilon)))
        .fold((1, f64::MIN), |best, cur| if cur.1 > best.1 { cur } else { best });
    let bound = (2f64.powf(1.0 / epsilon) / (epsilon * std::f64::consts::LN_2)).exp();
    DivisorBound { max_ratio, argmax, bound, holds: max_ratio <= bound }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ProbeError {
    #[error("exponent s = {s} must exceed r = {r}")]
    OutOfContract { r: f64, s: f64 },
    #[error("cutoff grid must be strictly increasing, nonempty and within the coefficient range")]
    BadGrid,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TailReport {
    /// Smallest `c` with `Σ_{n≤x} a_n ≤ c·x^r` over the coefficient range.
    pub growth_constant: f64,
    /// `(cutoff, Σ_{n ≤ cutoff} a_n / n^s)`.
    pub partial_sums: Vec<(usize, f64)>,
    /// Differences between consecutive partial sums.
    pub increments: Vec<f64>,
    pub max_increment: f64,
    pub last_increment: f64,
    pub increments_nonincreasing: bool,
}

/// Partial sums of `Σ a_n n^{-s}` at the cutoffs in `grid`.
///
/// `coeffs[n - 1]` is `a_n`. This is a sanity probe on finite data (tail
/// increments shrink when `s > r`), not a convergence proof.
pub fn dirichlet_tail_probe(coeffs: &[f64], r: f64, s: f64, grid: &[usize]) -> Result<TailReport, ProbeError> {
    if s <= r {
        return Err(ProbeError::OutOfContract { r, s });
    }
    if grid.is_empty() || grid.windows(2).any(|w| w[0] >= w[1]) || grid[0] == 0 || grid[grid.len() - 1] > coeffs.len() {
        return Err(ProbeError::BadGrid);
    }
    let mut growth_constant: f64 = 0.0;
    let mut running = 0.0;
    for (i, &a) in coeffs.iter().enumerate() {
        running += a;
        growth_constant = growth_constant.max(running / ((i + 1) as f64).powf(r));
    }
    let mut partial_sums = Vec::with_capacity(grid.len());
    let mut sum = 0.0;
    let mut n = 0;
    for &cut in grid {
        while n < cut {
            n += 1;
            sum += coeffs[n - 1] / (n as f64).powf(s);
        }
        partial_sums.push((cut, sum));
    }
    let increments: Vec<f64> = partial_sums.windows(2).map(|w| w[1].1 - w[0].1).collect();
    let max_increment = increments.iter().cloned().fold(0.0, f64::max);
    let last_increment = increments.last().copied().unwrap_or(0.0);
    let increments_nonincreasing = increments.windows(2).all(|w| w[1] <= w[0]);
    Ok(TailReport { growth_constant, partial_sums, increments, max_increment, last_increment, increments_nonincreasing })
}

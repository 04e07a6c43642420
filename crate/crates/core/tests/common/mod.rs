//! Brute-force oracles, written without any of the library's algorithms.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

pub fn is_squarefree(n: u64) -> bool {
    let mut d = 2;
    while d * d <= n {
        if n % (d * d) == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Fundamental discriminants with `|d| ≤ x`, by checking both signs of every
/// `n ≤ x` against the two defining cases: `d ≡ 1 (mod 4)` squarefree, or
/// `d = 4m` with `m ≡ 2, 3 (mod 4)` squarefree.
pub fn fundamental_discriminants(x: u64) -> Vec<i64> {
    let is_fundamental = |d: i64| {
        if d == 1 || d == 0 {
            return false;
        }
        if d.rem_euclid(4) == 1 {
            return is_squarefree(d.unsigned_abs());
        }
        if d % 4 == 0 {
            let m = d / 4;
            return matches!(m.rem_euclid(4), 2 | 3) && is_squarefree(m.unsigned_abs());
        }
        false
    };
    let mut out = Vec::new();
    for n in 1..=x as i64 {
        for d in [-n, n] {
            if is_fundamental(d) {
                out.push(d);
            }
        }
    }
    out
}

/// Sorted absolute discriminants of quadratic fields up to `x`.
pub fn quadratic_discs(x: u64) -> Vec<u64> {
    fundamental_discriminants(x).iter().map(|d| d.unsigned_abs()).collect()
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn mobius(mut n: u64) -> i64 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Number of characters of `(ℤ/d)^×` whose `ℓ`-th power is trivial, which
/// equals the number of units `u` with `u^ℓ ≡ 1 (mod d)`.
fn characters_killed_by(ell: u64, d: u64) -> i64 {
    (1..=d)
        .filter(|&u| gcd(u, d) == 1)
        .filter(|&u| (0..ell).fold(1u64, |acc, _| acc * u % d) == 1 % d)
        .count() as i64
}

/// Cyclic degree-`ℓ` fields of conductor `f`: primitive characters of order
/// `ℓ` and conductor `f`, counted by Möbius inversion over divisors, divided
/// by the `ℓ − 1` generators of each character group.
pub fn cyclic_fields_of_conductor(ell: u64, f: u64) -> u64 {
    if f == 1 {
        return 0;
    }
    let prim: i64 = (1..=f).filter(|d| f % d == 0).map(|d| mobius(f / d) * characters_killed_by(ell, d)).sum();
    assert!(prim >= 0 && prim as u64 % (ell - 1) == 0, "f = {f}: {prim}");
    prim as u64 / (ell - 1)
}

/// Sorted discriminants `f^(ℓ−1) ≤ x` of cyclic degree-`ℓ` fields, one entry
/// per field.
pub fn cyclic_discs(ell: u64, x: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut f = 1u64;
    while f.pow(ell as u32 - 1) <= x {
        let n = cyclic_fields_of_conductor(ell, f);
        out.extend(std::iter::repeat(f.pow(ell as u32 - 1)).take(n as usize));
        f += 1;
    }
    out
}

fn squarefree_kernel(n: i64) -> i64 {
    let mut m = n.unsigned_abs();
    let mut k = 1;
    let mut p = 2;
    while p * p <= m {
        let mut e = 0;
        while m % p == 0 {
            m /= p;
            e += 1;
        }
        if e % 2 == 1 {
            k *= p;
        }
        p += 1;
    }
    (k * m) as i64 * n.signum()
}

fn is_square(n: u64) -> bool {
    let r = (n as f64).sqrt().round() as u64;
    (r.saturating_sub(1)..=r + 1).any(|s| s * s == n)
}

/// Biquadratic fields with `|d₁d₂d₃| ≤ x`, as sorted discriminant triples.
///
/// Every pair of quadratic discriminants with `|d₁d₂| ≤ x/3` is tried; the
/// third is the discriminant of `ℚ(√(d₁d₂))`, and the product of the three
/// is checked to be a square before the field is recorded.
pub fn biquadratic_fields(x: u64) -> BTreeSet<[i64; 3]> {
    let discs = fundamental_discriminants(x / 3);
    let mut fields = BTreeSet::new();
    for (i, &d1) in discs.iter().enumerate() {
        for &d2 in &discs[i + 1..] {
            if d1.unsigned_abs() * d2.unsigned_abs() > x / 3 {
                break;
            }
            let m = squarefree_kernel(d1 * d2);
            if m == 1 {
                continue;
            }
            let d3 = if m.rem_euclid(4) == 1 { m } else { 4 * m };
            let disc = d1.unsigned_abs() as u128 * d2.unsigned_abs() as u128 * d3.unsigned_abs() as u128;
            if disc > x as u128 {
                continue;
            }
            assert!(is_square(disc as u64), "{d1} {d2} {d3}");
            let mut t = [d1, d2, d3];
            t.sort();
            fields.insert(t);
        }
    }
    fields
}

pub fn biquadratic_discs(x: u64) -> Vec<u64> {
    let mut out: Vec<u64> = biquadratic_fields(x).iter().map(|t| t.iter().map(|d| d.unsigned_abs()).product()).collect();
    out.sort();
    out
}

/// `#{d ∈ discs : d ≤ x}` for a sorted list.
pub fn count_upto(discs: &[u64], x: u64) -> u64 {
    discs.partition_point(|&d| d <= x) as u64
}

/// Permutations as image vectors, composed right to left.
pub type Images = Vec<usize>;

pub fn compose(p: &[usize], q: &[usize]) -> Images {
    q.iter().map(|&i| p[i]).collect()
}

pub fn invert(p: &[usize]) -> Images {
    let mut inv = vec![0; p.len()];
    for (i, &j) in p.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

/// Group order by orbit-stabilizer recursion with Schreier generators.
pub fn schreier_order(degree: usize, gens: &[Images]) -> u128 {
    let id: Images = (0..degree).collect();
    let gens: Vec<Images> = gens.iter().filter(|g| **g != id).cloned().collect::<HashSet<_>>().into_iter().collect();
    let Some(base) = (0..degree).find(|&b| gens.iter().any(|g| g[b] != b)) else {
        return 1;
    };
    let mut transversal: HashMap<usize, Images> = HashMap::from([(base, id.clone())]);
    let mut queue = VecDeque::from([base]);
    while let Some(pt) = queue.pop_front() {
        for g in &gens {
            let next = g[pt];
            if !transversal.contains_key(&next) {
                transversal.insert(next, compose(g, &transversal[&pt]));
                queue.push_back(next);
            }
        }
    }
    let mut stab: HashSet<Images> = HashSet::new();
    for u in transversal.values() {
        for g in &gens {
            let gu = compose(g, u);
            let s = compose(&invert(&transversal[&gu[base]]), &gu);
            debug_assert_eq!(s[base], base);
            if s != id {
                stab.insert(s);
            }
        }
    }
    let stab: Vec<Images> = stab.into_iter().collect();
    transversal.len() as u128 * schreier_order(degree, &stab)
}

/// Number of cycles of `p`, counting fixed points.
pub fn cycle_count(p: &[usize]) -> usize {
    let mut seen = vec![false; p.len()];
    let mut cycles = 0;
    for start in 0..p.len() {
        if !seen[start] {
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = p[i];
            }
        }
    }
    cycles
}

/// Brute `k`-powerful test by trial division.
pub fn is_powerful(k: u32, mut n: u64) -> bool {
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 && e < k {
            return false;
        }
        p += 1;
    }
    n == 1
}

//! Exhaustive enumeration of effective divisors.

use crate::divisor::Divisor;

/// All effective divisors of the given degree on `n` vertices, in ascending
/// lexicographic order.
pub fn effective_divisors(n: usize, degree: usize) -> Vec<Divisor> {
    EffectiveDivisors::new(n, degree).collect()
}

/// Lazy form of [`effective_divisors`], for degrees where the full list
/// would not fit in memory.
#[derive(Clone, Debug)]
pub struct EffectiveDivisors {
    current: Option<Vec<i64>>,
}

impl EffectiveDivisors {
    pub fn new(n: usize, degree: usize) -> Self {
        let current = match n {
            0 if degree > 0 => None,
            0 => Some(Vec::new()),
            _ => {
                let mut first = vec![0; n];
                first[n - 1] = degree as i64;
                Some(first)
            }
        };
        EffectiveDivisors { current }
    }
}

impl Iterator for EffectiveDivisors {
    type Item = Divisor;

    fn next(&mut self) -> Option<Divisor> {
        let out = self.current.take()?;
        let mut next = out.clone();
        // the successor raises the entry just before the last nonzero one
        // and moves the remaining chips of the tail to the final vertex
        if let Some(j) = (1..next.len()).rev().find(|&j| next[j] > 0) {
            let tail = next[j];
            next[j - 1] += 1;
            next[j] = 0;
            let last = next.len() - 1;
            next[last] = tail - 1;
            self.current = Some(next);
        }
        Some(Divisor::new(out))
    }
}

/// All effective divisors of degree at most `max_degree`, by degree then
/// lexicographically.
pub fn effective_divisors_up_to(n: usize, max_degree: usize) -> Vec<Divisor> {
    (0..=max_degree).flat_map(|d| effective_divisors(n, d)).collect()
}

/// Every divisor on `n` vertices with entries in `lo..=hi`, lexicographically.
pub fn bounded_divisors(n: usize, lo: i64, hi: i64) -> Vec<Divisor> {
    let mut out = vec![Vec::with_capacity(n)];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (lo..=hi).map(move |x| {
                    let mut next = prefix.clone();
                    next.push(x);
                    next
                })
            })
            .collect();
    }
    out.into_iter().map(Divisor::new).collect()
}

//! Partial and complete linearization of multihomogeneous polynomials.
//!
//! `lin_{x_i}^gamma(f)` replaces `x_i` by a sum of `k = len(gamma)` fresh
//! variables and keeps the component whose degrees in the fresh block are
//! exactly `gamma`. The fresh block occupies indices `i .. i+k-1` and every
//! later variable shifts up by `k - 1`.

use crate::error::{Error, Result};
use crate::freealg::{FreePoly, MultiDegree, Word};

/// An ordered composition: positive parts summing to the degree being split.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Composition> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::EmptyComposition);
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// All compositions of `n` (ordered parts, each at least 1).
pub fn compositions(n: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        for part in 1..=remaining {
            current.push(part);
            rec(remaining - part, current, out);
            current.pop();
        }
    }
    rec(n, &mut current, &mut out);
    out
}

/// The partial linearization of `f` with respect to variable `var`.
pub fn lin(f: &FreePoly, var: u32, gamma: &Composition) -> Result<FreePoly> {
    let d = f.mdeg()?;
    let deg = d.degree_of(var);
    if gamma.total() != deg {
        return Err(Error::DegreeMismatch {
            expected: deg,
            got: gamma.total(),
        });
    }
    Ok(lin_unchecked(f, var, gamma.parts()))
}

/// Cartesian product of the factor lists; one empty tuple when there are no
/// factors.
fn multi_product<T: Clone>(factors: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for factor in factors {
        let mut next = Vec::with_capacity(out.len() * factor.len());
        for partial in &out {
            for item in factor {
                let mut v = partial.clone();
                v.push(item.clone());
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// Core expansion; callers have verified `sum(parts) = deg_var(f)`.
fn lin_unchecked(f: &FreePoly, var: u32, parts: &[u32]) -> FreePoly {
    let k = parts.len() as u32;
    let slots: Vec<u32> = (0..k).collect();
    let mut out = FreePoly::zero(f.char());
    for (w, c) in f.terms() {
        let occurrences = w.letters().iter().filter(|&&v| v == var).count();
        // Every way to route the occurrences of `var` into the fresh block,
        // filtered to the target block multidegree. Each surviving
        // assignment contributes a distinct word.
        for assignment in multi_product(&vec![slots.clone(); occurrences]) {
            let mut counts = vec![0u32; k as usize];
            for &slot in &assignment {
                counts[slot as usize] += 1;
            }
            if counts != parts {
                continue;
            }
            let mut letters = Vec::with_capacity(w.len());
            let mut occ = 0;
            for &v in w.letters() {
                if v == var {
                    letters.push(var + assignment[occ]);
                    occ += 1;
                } else if v > var {
                    letters.push(v + k - 1);
                } else {
                    letters.push(v);
                }
            }
            out.add_term(Word::new(letters), c);
        }
    }
    out
}

/// Complete linearization: split every variable into singleton parts. The
/// result is multilinear, with the block for the original `x_v` sitting at
/// indices `1 + sum(deg_u for u < v) ..`.
pub fn lin_complete(f: &FreePoly) -> Result<FreePoly> {
    let d = f.mdeg()?;
    let parts_per_var: Vec<Vec<u32>> = d
        .entries()
        .iter()
        .map(|&deg| vec![1u32; deg as usize])
        .collect();
    apply_pattern(f, &parts_per_var)
}

/// Apply one composition per variable, highest variable first so that lower
/// indices stay put while later blocks shift.
pub(crate) fn apply_pattern(f: &FreePoly, pattern: &[Vec<u32>]) -> Result<FreePoly> {
    let d = f.mdeg()?;
    let mut acc = f.clone();
    for v in (1..=pattern.len() as u32).rev() {
        let parts = &pattern[v as usize - 1];
        let deg = d.degree_of(v);
        if parts.iter().sum::<u32>() != deg {
            return Err(Error::DegreeMismatch {
                expected: deg,
                got: parts.iter().sum(),
            });
        }
        if deg == 0 {
            continue;
        }
        acc = lin_unchecked(&acc, v, parts);
    }
    Ok(acc)
}

/// Every linearization pattern for a multidegree: one composition per
/// variable. With `dedup` on, compositions that differ only by the order of
/// their parts are represented once, by the sorted-nonincreasing one
/// (permuting the parts only renames the fresh variables).
pub(crate) fn linearization_patterns(d: &MultiDegree, dedup: bool) -> Vec<Vec<Vec<u32>>> {
    let per_var: Vec<Vec<Vec<u32>>> = d
        .entries()
        .iter()
        .map(|&deg| {
            let all = compositions(deg);
            if dedup {
                all.into_iter()
                    .filter(|c| c.windows(2).all(|w| w[0] >= w[1]))
                    .collect()
            } else {
                all
            }
        })
        .collect();
    multi_product(&per_var)
}

/// The polynomial together with every iterated partial linearization, one
/// per pattern.
pub fn all_linearizations(f: &FreePoly, dedup: bool) -> Result<Vec<FreePoly>> {
    let d = f.mdeg()?;
    linearization_patterns(&d, dedup)
        .iter()
        .map(|pattern| apply_pattern(f, pattern))
        .collect()
}

//! Prime-field rank, used only as a cross-check on exact ranks.

use super::sparse::SparseVec;

/// The prime used by the consistency alarm (2^31 - 1).
pub const ALARM_PRIME: u64 = 2_147_483_647;

pub(crate) fn mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, b, p);
        }
        b = mul(b, b, p);
        e >>= 1;
    }
    r
}

pub(crate) fn inv(a: u64, p: u64) -> u64 {
    pow(a, p - 2, p)
}

/// Rank over GF(p) of the given rows. Rows with a denominator divisible by
/// `p` make the result meaningless; callers treat disagreement as an alarm.
pub fn rank_mod_p(rows: &[SparseVec], p: u64) -> usize {
    let mut basis: std::collections::HashMap<usize, Vec<(usize, u64)>> = Default::default();
    for row in rows {
        let mut v: Vec<(usize, u64)> = row
            .iter()
            .filter_map(|(i, x)| x.mod_p(p).map(|y| (*i, y)))
            .filter(|(_, y)| *y != 0)
            .collect();
        loop {
            let Some(&(c, x)) = v.first() else { break };
            match basis.get(&c) {
                Some(b) => {
                    let f = x;
                    v = axpy_mod(&v, b, p - f, p);
                }
                None => {
                    let s = inv(x, p);
                    let norm: Vec<(usize, u64)> = v.iter().map(|(i, y)| (*i, mul(*y, s, p))).collect();
                    basis.insert(c, norm);
                    break;
                }
            }
        }
    }
    basis.len()
}

fn axpy_mod(a: &[(usize, u64)], b: &[(usize, u64)], f: u64, p: u64) -> Vec<(usize, u64)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i]);
            i += 1;
        } else if take_b {
            out.push((b[j].0, mul(b[j].1, f, p)));
            j += 1;
        } else {
            let s = (a[i].1 + mul(b[j].1, f, p)) % p;
            if s != 0 {
                out.push((a[i].0, s));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

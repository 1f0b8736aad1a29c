//! Test-local reference values. Nothing here calls into the library.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(big(n), big(d))
}

/// Determinant by fraction-free elimination over the rationals.
pub fn det(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut acc = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return BigRational::zero();
        };
        if p != c {
            m.swap(p, c);
            acc = -acc;
        }
        let pivot = m[c][c].clone();
        acc *= pivot.clone();
        let (top, rest) = m.split_at_mut(c + 1);
        let prow = &top[c];
        for row in rest.iter_mut() {
            let f = row[c].clone() / pivot.clone();
            for (x, p) in row.iter_mut().zip(prow).skip(c) {
                *x -= f.clone() * p.clone();
            }
        }
    }
    acc
}

/// `|[n_1, ..., n_l]|` as the determinant of the tridiagonal matrix.
pub fn chain_det(entries: &[i64]) -> BigInt {
    let n = entries.len();
    let m = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match i.abs_diff(j) {
                    0 => rat(entries[i], 1),
                    1 => rat(-1, 1),
                    _ => BigRational::zero(),
                })
                .collect()
        })
        .collect();
    det(m).to_integer()
}

/// `n_1 - 1/(n_2 - ...)`, innermost first.
pub fn nested(entries: &[i64]) -> BigRational {
    let mut it = entries.iter().rev();
    let mut x = rat(*it.next().expect("nonempty"), 1);
    for &n in it {
        x = rat(n, 1) - x.recip();
    }
    x
}

pub fn twos(k: i64) -> Vec<i64> {
    vec![2; k.max(0) as usize]
}

/// `[2*(a-1), b, c, 2*(d-1)]` spelled out.
pub fn pattern(a: i64, b: i64, c: i64, d: i64) -> Vec<i64> {
    let mut v = twos(a - 1);
    v.extend([b, c]);
    v.extend(twos(d - 1));
    v
}

pub fn pattern_closed(a: i64, b: i64, c: i64, d: i64) -> i64 {
    a * b * c * d - a * b * d - a * c * d + a * b + c * d - a - d + 1
}

pub fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

pub fn inverse_mod(a: i64, m: i64) -> Option<i64> {
    (1..m.max(2)).find(|x| (a * x).rem_euclid(m) == 1 % m)
}

/// `q1` or its inverse modulo `q`.
pub fn same_type(q: i64, q1: i64, q_got: i64, q1_got: i64) -> bool {
    q == q_got && (q1 == q1_got || inverse_mod(q1, q) == Some(q1_got))
}

/// The four raw weights and their gcd.
pub fn kollar_raw(a: [i64; 4]) -> ([i64; 4], i64) {
    let [a1, a2, a3, a4] = a;
    let w = [
        a2 * a3 * a4 - a3 * a4 + a4 - 1,
        a1 * a3 * a4 - a1 * a4 + a1 - 1,
        a1 * a2 * a4 - a1 * a2 + a2 - 1,
        a1 * a2 * a3 - a2 * a3 + a3 - 1,
    ];
    let g = w.iter().fold(0, |g, &x| gcd(g, x));
    (w, g)
}

pub fn t_closed(a: [i64; 4]) -> BigRational {
    let [a1, a2, a3, a4] = a;
    let num = (a2 * a3 * a4 - a3 * a4 + a4 - 1) * ((a1 - 1) * (a2 - 1) * (a3 - 1) * (a4 - 1) - a1 * a3 - a2 * a4 + 2);
    let s1 = chain_det(&pattern(a4, a3, a1, a2));
    let s2 = chain_det(&pattern(a3, a2, a4, a1));
    BigRational::new(big(num), s1 * s2)
}

pub fn s1_closed(b: i64) -> BigRational {
    rat(18 * (b - 2), 27 * b * b - 36 * b + 4)
}

pub fn s3_closed(b: i64) -> BigRational {
    rat(2 * (b - 5), 3 * b * b - 2 * b - 2)
}

/// The T strings as displayed for the family.
pub fn t_strings(a: [i64; 4]) -> [Vec<i64>; 2] {
    let [a1, a2, a3, a4] = a;
    [pattern(a4, a3, a1, a2), pattern(a3, a2, a4, a1)]
}

pub fn s1_string(b: i64) -> Vec<i64> {
    let mut v = vec![3, b];
    v.extend(twos(7));
    v.push(3);
    v.extend(twos(b - 2));
    v
}

/// Strings of the two-parameter variants, keyed by family name.
pub fn variant_strings(family: &str, b: i64, c: i64) -> Vec<Vec<i64>> {
    let join = |parts: &[&[i64]]| parts.concat();
    match family {
        "S1-Pp" => vec![join(&[&twos(c - 2), &[3, b, 2, 2, c, 2, 2, 2, 2, 3], &twos(b - 2)])],
        "S1-Ppp" => vec![join(&[&twos(c - 2), &[3, b, 2, 2, 2, 2, 2, c, 2, 3], &twos(b - 2)])],
        "V" => vec![vec![2], join(&[&twos(c), &[3, 2, 2]]), join(&[&[2, 2 + c, b], &twos(b)])],
        "Y" => vec![join(&[&twos(c), &[3, 2, 2, 2, 2]]), join(&[&[2, 2 + c, b + 1], &twos(b)])],
        other => panic!("no variant {other}"),
    }
}

pub fn s3_strings(b: i64) -> [Vec<i64>; 3] {
    let mut long = vec![2, 2, b];
    long.extend(twos(b));
    [vec![2], vec![3, 2, 2], long]
}

pub fn all_chains(max_len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|c| {
                (lo..=hi).map(move |n| {
                    let mut d = c.clone();
                    d.push(n);
                    d
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

pub fn grid4(lo: i64, hi: i64) -> Vec<[i64; 4]> {
    let mut v = Vec::new();
    for a in lo..=hi {
        for b in lo..=hi {
            for c in lo..=hi {
                for d in lo..=hi {
                    v.push([a, b, c, d]);
                }
            }
        }
    }
    v
}

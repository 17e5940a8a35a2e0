//! Permutations of `{0, .., n-1}` stored as image arrays.

use crate::error::{Error, Result};

pub type Perm = Vec<usize>;

pub fn identity(n: usize) -> Perm {
    (0..n).collect()
}

pub fn is_identity(p: &[usize]) -> bool {
    p.iter().enumerate().all(|(i, &x)| i == x)
}

/// `(p ∘ q)(x) = p(q(x))`.
pub fn compose(p: &[usize], q: &[usize]) -> Perm {
    q.iter().map(|&x| p[x]).collect()
}

pub fn invert(p: &[usize]) -> Perm {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

pub fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    for &x in p {
        if x >= p.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

pub fn power(p: &[usize], k: i64) -> Perm {
    let base = if k < 0 { invert(p) } else { p.to_vec() };
    let mut out = identity(p.len());
    for _ in 0..k.unsigned_abs() {
        out = compose(&base, &out);
    }
    out
}

pub fn order(p: &[usize]) -> usize {
    let mut seen = vec![false; p.len()];
    let mut acc = 1;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        acc = lcm(acc, len);
    }
    acc
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: usize, b: usize) -> usize {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Parses cycle notation such as `"(1 2)(3 4)"` on points `1..=degree`
/// into a zero-based image array.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Perm> {
    let mut p = identity(degree);
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b' ' | b'\t' => i += 1,
            b'(' => {
                let start = i;
                let close = text[i..].find(')').map(|o| i + o).ok_or(Error::Parse {
                    pos: start,
                    msg: "unclosed cycle".into(),
                })?;
                let mut points = Vec::new();
                for tok in text[i + 1..close].split([' ', ',']) {
                    if tok.is_empty() {
                        continue;
                    }
                    let v: usize = tok.parse().map_err(|_| Error::Parse {
                        pos: start,
                        msg: format!("bad point {tok:?}"),
                    })?;
                    if v == 0 || v > degree {
                        return Err(Error::Parse {
                            pos: start,
                            msg: format!("point {v} outside 1..={degree}"),
                        });
                    }
                    points.push(v - 1);
                }
                let mut cyc = identity(degree);
                for w in 0..points.len() {
                    cyc[points[w]] = points[(w + 1) % points.len()];
                }
                if !is_permutation(&cyc) {
                    return Err(Error::Parse { pos: start, msg: "repeated point in cycle".into() });
                }
                // cycles written left to right act right to left, as products of functions
                p = compose(&p, &cyc);
                i = close + 1;
            }
            _ => {
                return Err(Error::Parse { pos: i, msg: "expected '('".into() });
            }
        }
    }
    Ok(p)
}

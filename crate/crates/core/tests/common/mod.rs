//! Brute-force oracles written independently of the library.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::PathBuf;

/// All permutations of `1..=n` as plain vectors, in lexicographic order.
pub fn all_perms(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let n = used.len();
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 1..=n {
            if !used[v - 1] {
                used[v - 1] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v - 1] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Lengths of the factors of the factorization into words whose first
/// letter exceeds the rest, factors increasing by first letter.
pub fn sc(w: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::new();
    let mut head = 0;
    for &x in w {
        if out.is_empty() || x > head {
            out.push(1);
            head = x;
        } else {
            *out.last_mut().unwrap() += 1;
        }
    }
    out
}

pub fn inv(w: &[usize]) -> usize {
    let mut c = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                c += 1;
            }
        }
    }
    c
}

fn cycles(w: &[usize]) -> Vec<Vec<usize>> {
    let n = w.len();
    let mut seen = vec![false; n + 1];
    let mut out = Vec::new();
    for start in 1..=n {
        if seen[start] {
            continue;
        }
        let mut c = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            c.push(x);
            x = w[x - 1];
        }
        out.push(c);
    }
    out
}

/// Cycle lengths, cycles sorted by their largest element.
pub fn octype(w: &[usize]) -> Vec<usize> {
    let mut cs = cycles(w);
    cs.sort_by_key(|c| *c.iter().max().unwrap());
    cs.iter().map(Vec::len).collect()
}

/// Cycles started at their minimum, by increasing minima, concatenated.
pub fn foata(w: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    for c in cycles(w) {
        out.extend(c);
    }
    out
}

/// `i ↦ n + 1 - w(n + 1 - i)`.
pub fn reverse_complement(w: &[usize]) -> Vec<usize> {
    let n = w.len();
    (1..=n).map(|i| n + 1 - w[n - i]).collect()
}

pub fn invc(w: &[usize]) -> usize {
    inv(&foata(&reverse_complement(w)))
}

pub fn inverse(w: &[usize]) -> Vec<usize> {
    let mut out = vec![0; w.len()];
    for (i, &v) in w.iter().enumerate() {
        out[v - 1] = i + 1;
    }
    out
}

/// Polynomial as exponent ↦ coefficient.
pub type Poly = BTreeMap<usize, i64>;

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

pub fn golden(name: &str) -> String {
    std::fs::read_to_string(golden_dir().join(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

/// Parses `X_idx = c B_idx + ...` into `(lhs index, [(rhs index, coeff)])`.
pub fn parse_expansion_line(line: &str) -> (String, Vec<(String, i64)>) {
    let (lhs, rhs) = line.split_once(" = ").expect("an equation");
    let lhs = lhs.split_once('_').expect("indexed symbol").1.to_string();
    let mut terms = Vec::new();
    let mut sign = 1;
    let mut coeff: Option<i64> = None;
    for tok in rhs.split_whitespace() {
        match tok {
            "+" => sign = 1,
            "-" => sign = -1,
            _ => {
                let (neg, tok) = match tok.strip_prefix('-') {
                    Some(t) => (true, t),
                    None => (false, tok),
                };
                if neg {
                    sign = -sign;
                }
                if let Ok(c) = tok.parse::<i64>() {
                    coeff = Some(c);
                    continue;
                }
                let idx = tok.split_once('_').expect("indexed symbol").1.to_string();
                terms.push((idx, sign * coeff.take().unwrap_or(1)));
                sign = 1;
            }
        }
    }
    (lhs, terms)
}

/// Parses a matrix file: header of labels, then rows.
pub fn parse_matrix(text: &str) -> (Vec<String>, Vec<Vec<i64>>) {
    let mut lines = text.lines();
    let labels = lines.next().unwrap().split_whitespace().map(String::from).collect();
    let rows = lines.map(|l| l.split_whitespace().map(|x| x.parse().unwrap()).collect()).collect();
    (labels, rows)
}

/// Digits of a compact label.
pub fn parts(label: &str) -> Vec<usize> {
    label.chars().map(|c| c.to_digit(10).unwrap() as usize).collect()
}

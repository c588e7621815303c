//! Slow, obviously-correct reference implementations. They work on plain
//! boolean matrices and share no code with the library beyond `Digraph`
//! construction and arc queries.

#![allow(dead_code)]

use ckikit::Digraph;
use rand::Rng;

pub type Matrix = Vec<Vec<bool>>;

pub fn matrix(d: &Digraph) -> Matrix {
    let n = d.order();
    (0..n).map(|i| (0..n).map(|j| d.has_arc(i, j)).collect()).collect()
}

pub fn from_matrix(m: &Matrix) -> Digraph {
    let arcs: Vec<(usize, usize)> = (0..m.len())
        .flat_map(|i| (0..m.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| m[i][j])
        .collect();
    Digraph::from_arcs(m.len(), &arcs).unwrap()
}

fn members(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Independent and absorbing inside the induced subdigraph on `within`.
pub fn is_kernel_within(m: &Matrix, within: u64, s: u64) -> bool {
    let n = m.len();
    let vs = members(s, n);
    for &a in &vs {
        for &b in &vs {
            if m[a][b] {
                return false;
            }
        }
    }
    members(within & !s, n)
        .into_iter()
        .all(|x| vs.iter().any(|&k| m[x][k]))
}

/// Every kernel of the subdigraph induced by `within`, by scanning all
/// subsets in increasing numeric order.
pub fn kernels_within(m: &Matrix, within: u64) -> Vec<u64> {
    let n = m.len();
    (0..1u64 << n)
        .filter(|&s| s & !within == 0 && is_kernel_within(m, within, s))
        .collect()
}

pub fn brute_kernels(m: &Matrix) -> Vec<u64> {
    kernels_within(m, (1u64 << m.len()) - 1)
}

pub fn brute_kernel_perfect(m: &Matrix) -> bool {
    let n = m.len();
    (1..1u64 << n).all(|w| !kernels_within(m, w).is_empty())
}

/// No kernel, while every proper nonempty induced subdigraph has one.
pub fn brute_cki(m: &Matrix) -> bool {
    let n = m.len();
    let full = (1u64 << n) - 1;
    n > 0
        && kernels_within(m, full).is_empty()
        && (1..full).all(|w| !kernels_within(m, w).is_empty())
}

/// Strongly connected by plain transitive closure.
pub fn brute_strong(m: &Matrix) -> bool {
    let n = m.len();
    let mut r = m.clone();
    for (i, row) in r.iter_mut().enumerate() {
        row[i] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if r[i][k] && r[k][j] {
                    r[i][j] = true;
                }
            }
        }
    }
    r.iter().all(|row| row.iter().all(|&x| x))
}

pub const INF: u32 = u32::MAX;

pub fn floyd_warshall(m: &Matrix) -> Vec<Vec<u32>> {
    let n = m.len();
    let mut d = vec![vec![INF; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                d[i][j] = 0;
            } else if m[i][j] {
                d[i][j] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] != INF && d[k][j] != INF && d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Underlying simple graph is 2-colourable, by trying every colouring.
pub fn brute_bipartite(m: &Matrix) -> bool {
    let n = m.len();
    (0..1u64 << n).any(|c| {
        (0..n).all(|i| (0..n).all(|j| !(m[i][j] && (c >> i & 1) == (c >> j & 1))))
    })
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

pub fn perm_isomorphic(a: &Matrix, b: &Matrix) -> bool {
    let n = a.len();
    n == b.len()
        && permutations(n)
            .iter()
            .any(|p| (0..n).all(|i| (0..n).all(|j| a[i][j] == b[p[i]][p[j]])))
}

/// Vertex sequences `x_0 .. x_k` of distinct vertices along arcs.
pub fn brute_k_paths(m: &Matrix, k: usize) -> Vec<Vec<usize>> {
    fn rec(m: &Matrix, k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if p.len() == k + 1 {
            out.push(p.clone());
            return;
        }
        let last = *p.last().unwrap();
        for w in 0..m.len() {
            if m[last][w] && !p.contains(&w) {
                p.push(w);
                rec(m, k, p, out);
                p.pop();
            }
        }
    }
    let mut out = Vec::new();
    for v in 0..m.len() {
        rec(m, k, &mut vec![v], &mut out);
    }
    out
}

/// Which adjacency states an unordered pair may take in a class.
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    All,
    Oriented,
    Semicomplete,
}

fn pair_states(kind: Kind) -> &'static [(bool, bool)] {
    match kind {
        Kind::All => &[(false, false), (true, false), (false, true), (true, true)],
        Kind::Oriented => &[(false, false), (true, false), (false, true)],
        Kind::Semicomplete => &[(true, false), (false, true), (true, true)],
    }
}

/// Isomorphism classes of order `n`, counted by marking the orbit of every
/// labeled digraph under all vertex permutations.
pub fn orbit_count(n: usize, kind: Kind) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let states = pair_states(kind);
    let base = states.len();
    let total = base.pow(pairs.len() as u32);
    let code_of = |bits: u64| -> usize {
        let mut c = 0;
        for &(i, j) in pairs.iter().rev() {
            let s = (bits >> (i * n + j) & 1 == 1, bits >> (j * n + i) & 1 == 1);
            c = c * base + states.iter().position(|&t| t == s).unwrap();
        }
        c
    };
    let perms = permutations(n);
    let mut seen = vec![false; total];
    let mut classes = 0;
    for code in 0..total {
        if seen[code] {
            continue;
        }
        classes += 1;
        let mut bits = 0u64;
        let mut c = code;
        for &(i, j) in &pairs {
            let (f, b) = states[c % base];
            c /= base;
            bits |= (f as u64) << (i * n + j) | (b as u64) << (j * n + i);
        }
        for p in &perms {
            let mut img = 0u64;
            for i in 0..n {
                for j in 0..n {
                    if bits >> (i * n + j) & 1 == 1 {
                        img |= 1 << (p[i] * n + p[j]);
                    }
                }
            }
            seen[code_of(img)] = true;
        }
    }
    classes
}

/// digraph6 written out as a bit string first, then chopped into sextets.
pub fn reference_digraph6(m: &Matrix) -> String {
    let n = m.len();
    let mut bitstr = String::new();
    for row in m {
        for &x in row {
            bitstr.push(if x { '1' } else { '0' });
        }
    }
    while bitstr.len() % 6 != 0 {
        bitstr.push('0');
    }
    let mut s = String::from("&");
    s.push(char::from(n as u8 + 63));
    for chunk in bitstr.as_bytes().chunks(6) {
        let v = u8::from_str_radix(std::str::from_utf8(chunk).unwrap(), 2).unwrap();
        s.push(char::from(v + 63));
    }
    s
}

pub fn random_matrix<R: Rng>(rng: &mut R, n: usize, p: f64) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| i != j && rng.gen_bool(p)).collect())
        .collect()
}

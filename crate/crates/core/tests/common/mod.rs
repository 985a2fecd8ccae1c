//! Oracles and generators shared by the integration tests. Nothing here
//! calls into the orbit engine.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use qtensor::{make_conjugation, validate_quandle, Pair, Quandle};
use rand::seq::SliceRandom;
use rand::Rng;

pub type Partition = Vec<Vec<Pair>>;

/// Sorts each block and the list of blocks.
pub fn normalize(mut p: Partition) -> Partition {
    for block in &mut p {
        block.sort_unstable();
    }
    p.sort_unstable();
    p
}

/// Orbits of `X x X` under the diagonal action of every `*y` and `~y`,
/// found by breadth-first search over the pair graph.
pub fn bfs_partition(q: &Quandle) -> Partition {
    let n = q.len();
    let mut seen = vec![false; n * n];
    let mut out = Vec::new();
    for start in 0..n * n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut block = vec![(start / n, start % n)];
        let mut queue = VecDeque::from([(start / n, start % n)]);
        while let Some((a, b)) = queue.pop_front() {
            for y in 0..n {
                for (c, d) in [(q.star(a, y), q.star(b, y)), (q.bar(a, y), q.bar(b, y))] {
                    if !seen[c * n + d] {
                        seen[c * n + d] = true;
                        block.push((c, d));
                        queue.push_back((c, d));
                    }
                }
            }
        }
        out.push(block);
    }
    normalize(out)
}

/// Circular distance on `Z/n`.
pub fn circular_distance(n: usize, x: usize, y: usize) -> usize {
    let d = x.abs_diff(y);
    d.min(n - d)
}

/// Dihedral classes straight from the defining predicate: same distance,
/// and for even `n` same parity of the first coordinate.
pub fn dihedral_partition_by_predicate(n: usize) -> Partition {
    let key = |a: usize, b: usize| (circular_distance(n, a, b), if n.is_multiple_of(2) { a % 2 } else { 0 });
    let keys: BTreeSet<_> = (0..n).flat_map(|a| (0..n).map(move |b| key(a, b))).collect();
    normalize(
        keys.into_iter()
            .map(|k| {
                (0..n)
                    .flat_map(|a| (0..n).map(move |b| (a, b)))
                    .filter(|&(a, b)| key(a, b) == k)
                    .collect()
            })
            .collect(),
    )
}

/// `{E^{e,d}}` for every class `E` of the base, encoded as `x+ = x`, `x- = n + x`.
pub fn doubled_partition(base: &Partition, n: usize) -> Partition {
    let mut out = Vec::new();
    for class in base {
        for e in [0, n] {
            for d in [0, n] {
                out.push(class.iter().map(|&(a, b)| (a + e, b + d)).collect());
            }
        }
    }
    normalize(out)
}

/// Copies the table under a relabeling `x -> perm[x]`.
pub fn relabel(table: &[Vec<usize>], perm: &[usize]) -> Vec<Vec<usize>> {
    let n = table.len();
    let mut out = vec![vec![0; n]; n];
    for x in 0..n {
        for y in 0..n {
            out[perm[x]][perm[y]] = perm[table[x][y]];
        }
    }
    out
}

pub fn alexander_table(n: usize, t: usize) -> Vec<Vec<usize>> {
    (0..n)
        .map(|x| (0..n).map(|y| (t * x + (n + 1 - t % n) * y) % n).collect())
        .collect()
}

/// `x * y = 2y - x` on `Z/a x Z/b`, elements numbered `i * b + j`.
pub fn takasaki_table(a: usize, b: usize) -> Vec<Vec<usize>> {
    let n = a * b;
    (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    let (xi, xj) = (x / b, x % b);
                    let (yi, yj) = (y / b, y % b);
                    ((2 * yi + a - xi) % a) * b + (2 * yj + 2 * b - xj) % b
                })
                .collect()
        })
        .collect()
}

/// Disjoint union where elements of different parts act trivially.
pub fn disjoint_union(x: &[Vec<usize>], y: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let (n, m) = (x.len(), y.len());
    (0..n + m)
        .map(|a| {
            (0..n + m)
                .map(|b| match (a < n, b < n) {
                    (true, true) => x[a][b],
                    (false, false) => n + y[a - n][b - n],
                    _ => a,
                })
                .collect()
        })
        .collect()
}

/// Closes a set of permutations under composition; returns the
/// multiplication table (`g h` = apply `g` then `h`) with the identity at 0,
/// and the inverse list.
pub fn permutation_group(gens: &[Vec<usize>]) -> (Vec<Vec<usize>>, Vec<usize>) {
    let k = gens[0].len();
    let mut elems: Vec<Vec<usize>> = vec![(0..k).collect()];
    let mut i = 0;
    while i < elems.len() {
        for g in gens {
            let next: Vec<usize> = (0..k).map(|p| g[elems[i][p]]).collect();
            if !elems.contains(&next) {
                elems.push(next);
            }
        }
        i += 1;
    }
    let index = |p: &Vec<usize>| elems.iter().position(|e| e == p).unwrap();
    let table: Vec<Vec<usize>> = elems
        .iter()
        .map(|g| {
            elems
                .iter()
                .map(|h| index(&(0..k).map(|p| h[g[p]]).collect()))
                .collect()
        })
        .collect();
    let inverse = (0..elems.len())
        .map(|a| (0..elems.len()).find(|&b| table[a][b] == 0).unwrap())
        .collect();
    (table, inverse)
}

fn units(n: usize) -> Vec<usize> {
    (1..n.max(2)).filter(|&t| gcd(t, n) == 1).collect()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A random quandle table with at most `max_n` elements, from Alexander,
/// Takasaki, conjugation and disjoint-union constructions, relabeled by a
/// random permutation.
pub fn random_table<R: Rng>(rng: &mut R, max_n: usize) -> Vec<Vec<usize>> {
    let table = random_unlabeled(rng, max_n);
    let mut perm: Vec<usize> = (0..table.len()).collect();
    perm.shuffle(rng);
    relabel(&table, &perm)
}

fn random_unlabeled<R: Rng>(rng: &mut R, max_n: usize) -> Vec<Vec<usize>> {
    loop {
        match rng.gen_range(0..5) {
            0 => {
                let n = rng.gen_range(1..=max_n);
                let t = *units(n).choose(rng).unwrap();
                return alexander_table(n, t);
            }
            1 => {
                let a = rng.gen_range(1..=max_n);
                let b = rng.gen_range(1..=(max_n / a).max(1));
                return takasaki_table(a, b);
            }
            2 if max_n >= 6 => {
                let (g, inv) = permutation_group(&[vec![1, 0, 2], vec![1, 2, 0]]);
                return make_conjugation(&g, &inv).unwrap().table();
            }
            3 if max_n >= 8 => {
                let (g, inv) = permutation_group(&[vec![1, 2, 3, 0], vec![3, 2, 1, 0]]);
                return make_conjugation(&g, &inv).unwrap().table();
            }
            4 if max_n >= 2 => {
                let left = rng.gen_range(1..max_n);
                let x = random_unlabeled(rng, left);
                let y = random_unlabeled(rng, max_n - x.len());
                return disjoint_union(&x, &y);
            }
            _ => {}
        }
    }
}

pub fn random_quandle<R: Rng>(rng: &mut R, max_n: usize) -> Quandle {
    validate_quandle(&random_table(rng, max_n)).expect("generated tables are quandles")
}

//! Exhaustive enumeration of isomorphism-distinct graphs on few vertices,
//! used by the cross-validation sweeps.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

const CODE_LIMIT: usize = 11; // n*(n-1)/2 bits must fit in a u64

fn pair_bit(i: usize, j: usize, n: usize) -> u32 {
    // Upper-triangle index of (i, j), i < j, both 0-based.
    (i * (2 * n - i - 1) / 2 + (j - i - 1)) as u32
}

fn code_under(adj: &[u64], perm: &[usize], n: usize) -> u64 {
    let mut code = 0u64;
    for i in 0..n {
        for j in (i + 1)..n {
            if adj[perm[i]] >> perm[j] & 1 == 1 {
                code |= 1 << pair_bit(i, j, n);
            }
        }
    }
    code
}

fn perms_within_classes(classes: &[Vec<usize>], prefix: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    match classes.split_first() {
        None => f(prefix),
        Some((first, rest)) => {
            let mut class = first.clone();
            permute(&mut class, 0, &mut |p| {
                let len = prefix.len();
                prefix.extend_from_slice(p);
                perms_within_classes(rest, prefix, f);
                prefix.truncate(len);
            });
        }
    }
}

fn permute(items: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, f);
        items.swap(k, i);
    }
}

/// An isomorphism-invariant code: the minimal adjacency bitstring over all
/// vertex orderings that sort degrees descending. Equal codes iff
/// isomorphic (colors are ignored).
pub fn canonical_code(g: &Graph) -> Result<u64> {
    let n = g.n();
    if n > CODE_LIMIT {
        return Err(Error::SizeLimit { n, limit: CODE_LIMIT });
    }
    let adj: Vec<u64> = (0..n)
        .map(|i| {
            g.neighbors(i as Vertex + 1)
                .iter()
                .fold(0u64, |m, &v| m | 1 << (v - 1))
        })
        .collect();
    // Group 0-based vertices by descending degree; only orderings laying
    // the classes out in that order need to be considered.
    let mut by_degree: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..n {
        by_degree.entry(n - adj[i].count_ones() as usize).or_default().push(i);
    }
    let classes: Vec<Vec<usize>> = by_degree.into_values().collect();
    let mut best = u64::MAX;
    perms_within_classes(&classes, &mut Vec::with_capacity(n), &mut |perm| {
        best = best.min(code_under(&adj, perm, n));
    });
    Ok(best)
}

/// All isomorphism-distinct (uncolored) graphs on exactly `n` vertices,
/// in ascending canonical-code order. Built by extending the list for
/// n-1 with every possible neighborhood of a new vertex.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > CODE_LIMIT {
        return Err(Error::SizeLimit { n, limit: CODE_LIMIT });
    }
    if n == 0 {
        return Ok(vec![Graph::new(0)]);
    }
    let mut seen: BTreeMap<u64, Graph> = BTreeMap::new();
    for parent in all_graphs(n - 1)? {
        for mask in 0u64..(1 << (n - 1)) {
            let mut g = Graph::new(n);
            for (u, v) in parent.edges() {
                g.add_edge(u, v)?;
            }
            for i in 0..(n - 1) {
                if mask >> i & 1 == 1 {
                    g.add_edge(i as Vertex + 1, n as Vertex)?;
                }
            }
            seen.entry(canonical_code(&g)?).or_insert(g);
        }
    }
    Ok(seen.into_values().collect())
}

/// All isomorphism-distinct graphs with at most `n` vertices, the empty
/// graph included.
pub fn all_graphs_up_to(n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for k in 0..=n {
        out.extend(all_graphs(k)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_the_known_sequence() {
        let expect = [1usize, 1, 2, 4, 11, 34, 156];
        for (n, &want) in expect.iter().enumerate() {
            assert_eq!(all_graphs(n).unwrap().len(), want, "n = {n}");
        }
    }

    #[test]
    fn code_is_isomorphism_invariant() {
        let g = Graph::from_edges(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (2, 5)]).unwrap();
        let a = canonical_code(&g).unwrap();
        for perm in [[2u32, 3, 4, 5, 1], [5, 4, 3, 2, 1], [3, 1, 5, 2, 4]] {
            assert_eq!(canonical_code(&g.permuted(&perm)).unwrap(), a);
        }
        let h = Graph::from_edges(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]).unwrap();
        assert_ne!(canonical_code(&g).unwrap(), canonical_code(&h).unwrap());
    }

    #[test]
    fn distinct_small_graphs_have_distinct_codes() {
        let graphs = all_graphs(5).unwrap();
        let mut codes: Vec<u64> = graphs.iter().map(|g| canonical_code(g).unwrap()).collect();
        codes.dedup();
        assert_eq!(codes.len(), graphs.len());
    }
}

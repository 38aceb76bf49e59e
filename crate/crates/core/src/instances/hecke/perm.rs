//! Permutations of `{0..n-1}` in one-line notation, acting on the right:
//! `w[i]` is the image `i^w`, and `u * v` means "first `u`, then `v`".

use std::collections::HashMap;

pub type Perm = Vec<u8>;

pub fn identity(n: usize) -> Perm {
    (0..n as u8).collect()
}

/// `(u * v)[i] = v[u[i]]`.
pub fn compose(u: &[u8], v: &[u8]) -> Perm {
    u.iter().map(|&i| v[i as usize]).collect()
}

pub fn inverse(w: &[u8]) -> Perm {
    let mut out = vec![0u8; w.len()];
    for (i, &x) in w.iter().enumerate() {
        out[x as usize] = i as u8;
    }
    out
}

/// Number of inversions.
pub fn length(w: &[u8]) -> usize {
    let mut l = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                l += 1;
            }
        }
    }
    l
}

/// The transposition `(a, b)`.
pub fn transposition(n: usize, a: usize, b: usize) -> Perm {
    let mut w = identity(n);
    w.swap(a, b);
    w
}

/// All permutations in lexicographic order of their one-line notation.
pub fn all(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut cur = identity(n);
    loop {
        out.push(cur.clone());
        // next permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

/// Enumeration of `S_n` with a rank lookup.
pub struct SymmetricGroup {
    n: usize,
    elements: Vec<Perm>,
    rank: HashMap<Perm, usize>,
    /// `right[w][i]` = rank of `w * s_i` (values `i`, `i+1` swapped).
    right: Vec<Vec<usize>>,
    /// Whether `w * s_i` is longer than `w`.
    right_up: Vec<Vec<bool>>,
    /// A parent `(w', i)` with `w = w' * s_i` and `l(w) = l(w') + 1`.
    parent: Vec<Option<(usize, usize)>>,
    /// Elements in order of nondecreasing length.
    by_length: Vec<usize>,
}

impl SymmetricGroup {
    pub fn new(n: usize) -> Self {
        let elements = all(n);
        let rank: HashMap<Perm, usize> = elements.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let gens = n.saturating_sub(1);
        let mut right = vec![vec![0; gens]; elements.len()];
        let mut right_up = vec![vec![false; gens]; elements.len()];
        for (r, w) in elements.iter().enumerate() {
            let pos = inverse(w);
            for i in 0..gens {
                let ws = compose(w, &transposition(n, i, i + 1));
                right[r][i] = rank[&ws];
                right_up[r][i] = pos[i] < pos[i + 1];
            }
        }
        let mut parent = vec![None; elements.len()];
        let mut by_length: Vec<usize> = (0..elements.len()).collect();
        by_length.sort_by_key(|&r| (length(&elements[r]), r));
        for &r in &by_length {
            for i in 0..gens {
                let up = right[r][i];
                if right_up[r][i] && parent[up].is_none() && up != 0 {
                    parent[up] = Some((r, i));
                }
            }
        }
        SymmetricGroup { n, elements, rank, right, right_up, parent, by_length }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, r: usize) -> &Perm {
        &self.elements[r]
    }

    pub fn rank_of(&self, w: &[u8]) -> usize {
        self.rank[w]
    }

    pub fn right(&self, r: usize, i: usize) -> usize {
        self.right[r][i]
    }

    pub fn right_up(&self, r: usize, i: usize) -> bool {
        self.right_up[r][i]
    }

    pub fn parent(&self, r: usize) -> Option<(usize, usize)> {
        self.parent[r]
    }

    pub fn by_length(&self) -> &[usize] {
        &self.by_length
    }

    /// A reduced word `[i_1, ..., i_k]` with `w = s_{i_1} * ... * s_{i_k}`.
    pub fn reduced_word(&self, r: usize) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = r;
        while let Some((p, i)) = self.parent[cur] {
            word.push(i);
            cur = p;
        }
        word.reverse();
        word
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_and_words() {
        let g = SymmetricGroup::new(4);
        assert_eq!(g.order(), 24);
        for r in 0..g.order() {
            let word = g.reduced_word(r);
            assert_eq!(word.len(), length(g.element(r)));
            let mut w = identity(4);
            for i in word {
                w = compose(&w, &transposition(4, i, i + 1));
            }
            assert_eq!(&w, g.element(r));
        }
    }

    #[test]
    fn composition_convention() {
        // first (0 1), then (1 2): 0 -> 1 -> 2
        let u = transposition(3, 0, 1);
        let v = transposition(3, 1, 2);
        assert_eq!(compose(&u, &v)[0], 2);
        assert_eq!(compose(&u, &inverse(&u)), identity(3));
    }
}

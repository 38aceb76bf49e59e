use std::fmt;

use super::perm::Perm;

/// A partition as a weakly decreasing list of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(pub Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Option<Partition> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        ok.then_some(Partition(parts))
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `self ⊵ other` in the dominance order (partial sums).
    pub fn dominates(&self, other: &Partition) -> bool {
        let (mut a, mut b) = (0, 0);
        let len = self.0.len().max(other.0.len());
        for i in 0..len {
            a += self.0.get(i).copied().unwrap_or(0);
            b += other.0.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Nodes `(row, col)`, 0-based, row by row.
    pub fn nodes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All partitions of `n` in reverse lexicographic order, so `(n)` comes
/// first and `(1^n)` last; this refines dominance.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// A standard tableau, stored as its rows of entries `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Option<Tableau> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        let n = shape.size();
        let mut seen = vec![false; n + 1];
        for row in &rows {
            for &x in row {
                if x == 0 || x > n || seen[x] {
                    return None;
                }
                seen[x] = true;
            }
        }
        let t = Tableau { rows };
        t.is_standard().then_some(t)
    }

    fn is_standard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = self.rows.windows(2).all(|p| p[1].iter().zip(&p[0]).all(|(lo, hi)| hi < lo));
        rows_ok && cols_ok
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition(self.rows.iter().map(Vec::len).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// `(row, col)` of the entry `k`, 0-based.
    pub fn position(&self, k: usize) -> (usize, usize) {
        for (r, row) in self.rows.iter().enumerate() {
            if let Some(c) = row.iter().position(|&x| x == k) {
                return (r, c);
            }
        }
        panic!("{k} does not occur in the tableau");
    }

    /// `(row of 1, row of 2, ..., row of n)`.
    pub fn row_sequence(&self) -> Vec<usize> {
        let mut seq = vec![0; self.size()];
        for (r, row) in self.rows.iter().enumerate() {
            for &x in row {
                seq[x - 1] = r;
            }
        }
        seq
    }

    /// Shape of the subtableau containing `1..=k`.
    pub fn restricted_shape(&self, k: usize) -> Partition {
        Partition(
            self.rows
                .iter()
                .map(|r| r.iter().filter(|&&x| x <= k).count())
                .filter(|&c| c > 0)
                .collect(),
        )
    }

    /// `self ⊵ other`: every restriction of `self` dominates that of `other`.
    pub fn dominates(&self, other: &Tableau) -> bool {
        (1..=self.size()).all(|k| self.restricted_shape(k).dominates(&other.restricted_shape(k)))
    }

    /// The row-reading tableau `t^λ`.
    pub fn superstandard(shape: &Partition) -> Tableau {
        let mut next = 1;
        let rows = shape
            .parts()
            .iter()
            .map(|&len| {
                let row: Vec<usize> = (next..next + len).collect();
                next += len;
                row
            })
            .collect();
        Tableau { rows }
    }

    /// `d(t)`: the permutation with `t^λ d(t) = t`, i.e. sending each entry
    /// of `t^λ` to the entry of `t` in the same node (0-based values).
    pub fn d(&self) -> Perm {
        let sup = Tableau::superstandard(&self.shape());
        let mut w = vec![0u8; self.size()];
        for (rs, rt) in sup.rows.iter().zip(&self.rows) {
            for (&a, &b) in rs.iter().zip(rt) {
                w[a - 1] = (b - 1) as u8;
            }
        }
        w
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| format!("[{}]", r.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// Standard `λ`-tableaux, most dominant first: lexicographic in the row
/// sequence, which refines dominance.
pub fn standard_tableaux(shape: &Partition) -> Vec<Tableau> {
    let n = shape.size();
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.parts().len()];
    fn go(k: usize, n: usize, shape: &Partition, rows: &mut Vec<Vec<usize>>, out: &mut Vec<Tableau>) {
        if k > n {
            out.push(Tableau { rows: rows.clone() });
            return;
        }
        for r in 0..rows.len() {
            let len = rows[r].len();
            let fits = len < shape.parts()[r] && (r == 0 || rows[r - 1].len() > len);
            if fits {
                rows[r].push(k);
                go(k + 1, n, shape, rows, out);
                rows[r].pop();
            }
        }
    }
    go(1, n, shape, &mut rows, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::hecke::perm;

    fn hook_count(shape: &Partition) -> usize {
        let n = shape.size();
        let conj: Vec<usize> = (0..shape.parts()[0]).map(|c| shape.parts().iter().filter(|&&p| p > c).count()).collect();
        let hooks: usize = shape.nodes().map(|(r, c)| (shape.parts()[r] - c) + (conj[c] - r) - 1).product();
        (1..=n).product::<usize>() / hooks
    }

    #[test]
    fn counts_match_hook_formula() {
        for n in 1..=6 {
            for p in partitions(n) {
                assert_eq!(standard_tableaux(&p).len(), hook_count(&p), "{p}");
            }
        }
        assert_eq!(partitions(5).len(), 7);
        assert_eq!(standard_tableaux(&Partition(vec![2, 1])).len(), 2);
        assert_eq!(standard_tableaux(&Partition(vec![2, 2])).len(), 2);
        assert_eq!(standard_tableaux(&Partition(vec![4])).len(), 1);
    }

    #[test]
    fn order_refines_dominance() {
        for n in 1..=6 {
            let ps = partitions(n);
            for (i, a) in ps.iter().enumerate() {
                for b in &ps[i + 1..] {
                    assert!(!b.dominates(a) || a == b);
                }
                let ts = standard_tableaux(a);
                for (i, s) in ts.iter().enumerate() {
                    for t in &ts[i + 1..] {
                        assert!(!t.dominates(s));
                    }
                }
            }
        }
    }

    #[test]
    fn two_one_tableaux() {
        let ts = standard_tableaux(&Partition(vec![2, 1]));
        assert_eq!(ts[0].to_string(), "[[1,2],[3]]");
        assert_eq!(ts[1].to_string(), "[[1,3],[2]]");
        assert!(ts[0].dominates(&ts[1]));
    }

    #[test]
    fn d_of_tableau() {
        let t = Tableau::from_rows(vec![vec![1, 3], vec![2]]).unwrap();
        // t^λ = [[1,2],[3]]; d swaps 2 and 3
        assert_eq!(t.d(), perm::transposition(3, 1, 2));
        assert!(Tableau::from_rows(vec![vec![2, 1]]).is_none());
    }
}

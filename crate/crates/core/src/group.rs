//! Finite groups as explicit multiplication tables.

use std::collections::{HashMap, VecDeque};

use crate::bitset::{ElemSet, MAX_ORDER};
use crate::error::{Error, Result};

/// A finite group given by its Cayley table. Elements are the dense indices
/// `0..order`, and index 0 is always the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    mult: Vec<u8>,
    inv: Vec<u8>,
    elem_order: Vec<u16>,
    labels: Option<Vec<String>>,
}

impl GroupTable {
    /// Builds and validates a table from `mult(a, b)`.
    ///
    /// Checks the Latin square property, that 0 is a two-sided identity, and
    /// associativity on every triple.
    pub fn from_fn(order: usize, mut mult: impl FnMut(usize, usize) -> usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge(order));
        }
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                let c = mult(a, b);
                if c >= order {
                    return Err(Error::NotAGroup(format!("product {a}*{b} = {c} out of range")));
                }
                table.push(c as u8);
            }
        }
        Self::from_raw(order, table)
    }

    fn from_raw(order: usize, mult: Vec<u8>) -> Result<Self> {
        let at = |a: usize, b: usize| mult[a * order + b] as usize;
        for a in 0..order {
            if at(0, a) != a || at(a, 0) != a {
                return Err(Error::NotAGroup("index 0 is not the identity".into()));
            }
        }
        let mut row_seen = vec![false; order];
        let mut col_seen = vec![false; order];
        for a in 0..order {
            row_seen.iter_mut().for_each(|x| *x = false);
            col_seen.iter_mut().for_each(|x| *x = false);
            for b in 0..order {
                let r = at(a, b);
                let c = at(b, a);
                if row_seen[r] || col_seen[c] {
                    return Err(Error::NotAGroup(format!("row/column {a} repeats an entry")));
                }
                row_seen[r] = true;
                col_seen[c] = true;
            }
        }
        for a in 0..order {
            for b in 0..order {
                let ab = at(a, b);
                for c in 0..order {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(Error::NotAGroup(format!("({a}*{b})*{c} != {a}*({b}*{c})")));
                    }
                }
            }
        }
        let mut inv = vec![0u8; order];
        for a in 0..order {
            inv[a] = (0..order).find(|&b| at(a, b) == 0).expect("latin square row contains identity") as u8;
        }
        let elem_order = (0..order)
            .map(|g| {
                let mut x = g;
                let mut k = 1u16;
                while x != 0 {
                    x = at(x, g);
                    k += 1;
                }
                k
            })
            .collect();
        Ok(GroupTable { order, mult, inv, elem_order, labels: None })
    }

    /// Group generated by permutations (images of `0..degree`, composed
    /// left to right: `p * q` applies `p` first).
    pub fn from_permutations(gens: &[Vec<usize>]) -> Result<Self> {
        let degree = gens.iter().map(Vec::len).max().unwrap_or(0);
        let pad = |p: &Vec<usize>| -> Vec<usize> { (0..degree).map(|i| p.get(i).copied().unwrap_or(i)).collect() };
        let gens: Vec<Vec<usize>> = gens.iter().map(pad).collect();
        let identity: Vec<usize> = (0..degree).collect();
        let compose = |p: &[usize], q: &[usize]| -> Vec<usize> { p.iter().map(|&x| q[x]).collect() };

        let mut elems = vec![identity.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &gens {
                let next = compose(&elems[i], g);
                if !index.contains_key(&next) {
                    if elems.len() == MAX_ORDER {
                        return Err(Error::OrderTooLarge(MAX_ORDER + 1));
                    }
                    index.insert(next.clone(), elems.len());
                    queue.push_back(elems.len());
                    elems.push(next);
                }
            }
        }
        let labels = elems.iter().map(|p| cycle_notation(p)).collect();
        let mut table = Self::from_fn(elems.len(), |a, b| index[&compose(&elems[a], &elems[b])])?;
        table.labels = Some(labels);
        Ok(table)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// Least `k >= 1` with `g^k` the identity.
    #[inline]
    pub fn element_order(&self, g: usize) -> usize {
        self.elem_order[g] as usize
    }

    pub fn pow(&self, g: usize, k: usize) -> usize {
        let k = k % self.element_order(g);
        (0..k).fold(0, |acc, _| self.mul(acc, g))
    }

    /// `[a, b] = a^-1 b^-1 a b`.
    #[inline]
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    /// `g^-1 x g`.
    #[inline]
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn conjugate_set(&self, set: &ElemSet, g: usize) -> ElemSet {
        set.iter().map(|x| self.conjugate(x, g)).collect()
    }

    pub fn elements(&self) -> ElemSet {
        ElemSet::full(self.order)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn label(&self, g: usize) -> String {
        match &self.labels {
            Some(l) => l[g].clone(),
            None => g.to_string(),
        }
    }

    /// Small generating set, chosen greedily from element index order.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = ElemSet::singleton(0);
        for g in 0..self.order {
            if !span.contains(g) {
                gens.push(g);
                span = self.closure(&gens);
            }
        }
        gens
    }

    /// Subgroup generated by `gens`, as an element set.
    pub fn closure(&self, gens: &[usize]) -> ElemSet {
        let mut set = ElemSet::singleton(0);
        let mut frontier = vec![0usize];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        set
    }

    /// Table with elements renamed by `perm` (`perm[old] = new`); `perm[0]` must be 0.
    pub fn relabel(&self, perm: &[usize]) -> Result<GroupTable> {
        if perm.len() != self.order || perm[0] != 0 {
            return Err(Error::Precondition("relabeling must fix the identity".into()));
        }
        let mut back = vec![usize::MAX; self.order];
        for (old, &new) in perm.iter().enumerate() {
            if new >= self.order || back[new] != usize::MAX {
                return Err(Error::Precondition("relabeling is not a bijection".into()));
            }
            back[new] = old;
        }
        let mut out = Self::from_fn(self.order, |a, b| perm[self.mul(back[a], back[b])])?;
        out.labels = self.labels.as_ref().map(|l| back.iter().map(|&o| l[o].clone()).collect());
        Ok(out)
    }

    /// The subgroup on `members` as a group in its own right, plus the map
    /// from new indices back to indices of `self`.
    pub fn induced(&self, members: &ElemSet) -> Result<(GroupTable, Vec<usize>)> {
        let back: Vec<usize> = members.iter().collect();
        if back.first() != Some(&0) {
            return Err(Error::NotASubgroup);
        }
        let mut fwd = vec![usize::MAX; self.order];
        for (new, &old) in back.iter().enumerate() {
            fwd[old] = new;
        }
        let mut closed = true;
        let table = Self::from_fn(back.len(), |a, b| {
            let c = fwd[self.mul(back[a], back[b])];
            if c == usize::MAX {
                closed = false;
                0
            } else {
                c
            }
        });
        if !closed {
            return Err(Error::NotASubgroup);
        }
        let mut table = table?;
        table.labels = self.labels.as_ref().map(|l| back.iter().map(|&o| l[o].clone()).collect());
        Ok((table, back))
    }
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = vec![start + 1];
        seen[start] = true;
        let mut x = p[start];
        while x != start {
            seen[x] = true;
            cycle.push(x + 1);
            x = p[x];
        }
        let body: Vec<String> = cycle.iter().map(ToString::to_string).collect();
        out.push_str(&format!("({})", body.join(" ")));
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> GroupTable {
        GroupTable::from_fn(n, |a, b| (a + b) % n).unwrap()
    }

    #[test]
    fn cyclic_orders() {
        let g = cyclic(12);
        assert_eq!(g.element_order(0), 1);
        assert_eq!(g.element_order(3), 4);
        assert_eq!(g.element_order(5), 12);
        for x in 0..12 {
            assert_eq!(12 % g.element_order(x), 0);
        }
    }

    #[test]
    fn rejects_non_groups() {
        // subtraction mod 3: Latin square, no identity on the left
        assert!(GroupTable::from_fn(3, |a, b| (a + 3 - b) % 3).is_err());
        // a non-associative loop of order 5 with identity 0
        let loop5 = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ];
        let err = GroupTable::from_fn(5, |a, b| loop5[a][b]).unwrap_err();
        assert!(matches!(err, Error::NotAGroup(_)));
        assert!(matches!(GroupTable::from_fn(300, |a, b| (a + b) % 300), Err(Error::OrderTooLarge(300))));
    }

    #[test]
    fn permutation_closure_s3() {
        // (1 2) and (1 2 3), zero based
        let g = GroupTable::from_permutations(&[vec![1, 0, 2], vec![1, 2, 0]]).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        assert_eq!(g.label(0), "()");
    }

    #[test]
    fn permutation_closure_cap() {
        // S_6 has order 720
        let gens = vec![vec![1, 0, 2, 3, 4, 5], vec![1, 2, 3, 4, 5, 0]];
        assert!(matches!(GroupTable::from_permutations(&gens), Err(Error::OrderTooLarge(_))));
    }

    #[test]
    fn relabel_and_induce() {
        let g = cyclic(6);
        let h = g.relabel(&[0, 5, 4, 3, 2, 1]).unwrap();
        assert_eq!(h.mul(5, 5), 4);
        assert!(g.relabel(&[1, 0, 2, 3, 4, 5]).is_err());
        let evens: ElemSet = [0, 2, 4].into_iter().collect();
        let (sub, back) = g.induced(&evens).unwrap();
        assert_eq!(sub.order(), 3);
        assert_eq!(back, vec![0, 2, 4]);
        assert!(g.induced(&[0, 1].into_iter().collect()).is_err());
    }

    #[test]
    fn generators_span() {
        let g = cyclic(12);
        let gens = g.generators();
        assert_eq!(g.closure(&gens).len(), 12);
        assert_eq!(g.closure(&[4]).len(), 3);
    }
}

//! Deterministic enumeration of small star-world models.

use std::collections::{BTreeMap, BTreeSet};

use crate::{Atom, DModel};

/// All involutions of 0..k as index maps, in a fixed order.
fn involutions(k: usize) -> Vec<Vec<usize>> {
    fn go(partial: &mut Vec<Option<usize>>, out: &mut Vec<Vec<usize>>) {
        match partial.iter().position(Option::is_none) {
            None => out.push(partial.iter().map(|x| x.unwrap()).collect()),
            Some(i) => {
                partial[i] = Some(i);
                go(partial, out);
                partial[i] = None;
                for j in i + 1..partial.len() {
                    if partial[j].is_none() {
                        partial[i] = Some(j);
                        partial[j] = Some(i);
                        go(partial, out);
                        partial[i] = None;
                        partial[j] = None;
                    }
                }
            }
        }
    }
    let mut out = Vec::new();
    go(&mut vec![None; k], &mut out);
    out
}

/// Lazily enumerate every model over `atoms` with 1..=`max_worlds` worlds:
/// all star involutions, all ternary relations, all valuations. The order is
/// fixed: world count, then involution, then relation bits, then valuation
/// bits. Sizes are capped because the space is doubly exponential.
pub fn enumerate_dmodels(atoms: &[Atom], max_worlds: usize) -> impl Iterator<Item = DModel> {
    assert!(atoms.len() <= 3, "at most 3 atoms");
    assert!(max_worlds <= 3, "at most 3 worlds");
    DModelIter::new(atoms.to_vec(), max_worlds)
}

struct DModelIter {
    atoms: Vec<Atom>,
    max_worlds: usize,
    k: usize,
    invs: Vec<Vec<usize>>,
    inv_idx: usize,
    tern_mask: u64,
    tern_total: u64,
    holds_mask: u64,
    holds_total: u64,
}

impl DModelIter {
    fn new(atoms: Vec<Atom>, max_worlds: usize) -> Self {
        let mut it = DModelIter {
            atoms,
            max_worlds,
            k: 0,
            invs: Vec::new(),
            inv_idx: 0,
            tern_mask: 0,
            tern_total: 0,
            holds_mask: 0,
            holds_total: 0,
        };
        if max_worlds >= 1 {
            it.enter_size(1);
        }
        it
    }

    fn enter_size(&mut self, k: usize) {
        self.k = k;
        self.invs = involutions(k);
        self.inv_idx = 0;
        self.tern_mask = 0;
        self.tern_total = 1u64 << (k * k * k);
        self.holds_mask = 0;
        self.holds_total = 1u64 << (self.atoms.len() * k);
    }

    fn build(&self) -> DModel {
        let k = self.k;
        let worlds: Vec<String> = (0..k).map(|i| format!("w{i}")).collect();
        let inv = &self.invs[self.inv_idx];
        let star: BTreeMap<String, String> = (0..k)
            .map(|i| (worlds[i].clone(), worlds[inv[i]].clone()))
            .collect();
        let mut tern = BTreeSet::new();
        for t in 0..(k * k * k) {
            if self.tern_mask >> t & 1 == 1 {
                tern.insert((
                    worlds[t / (k * k)].clone(),
                    worlds[t / k % k].clone(),
                    worlds[t % k].clone(),
                ));
            }
        }
        let mut holds = BTreeMap::new();
        for (ai, atom) in self.atoms.iter().enumerate() {
            for wi in 0..k {
                let bit = ai * k + wi;
                holds.insert(
                    (atom.clone(), worlds[wi].clone()),
                    self.holds_mask >> bit & 1 == 1,
                );
            }
        }
        DModel::new(worlds.clone(), star, tern, holds, worlds[0].clone())
            .expect("enumerated models are well-formed")
    }

    fn advance(&mut self) -> bool {
        self.holds_mask += 1;
        if self.holds_mask < self.holds_total {
            return true;
        }
        self.holds_mask = 0;
        self.tern_mask += 1;
        if self.tern_mask < self.tern_total {
            return true;
        }
        self.tern_mask = 0;
        self.inv_idx += 1;
        if self.inv_idx < self.invs.len() {
            return true;
        }
        if self.k < self.max_worlds {
            self.enter_size(self.k + 1);
            return true;
        }
        false
    }
}

impl Iterator for DModelIter {
    type Item = DModel;

    fn next(&mut self) -> Option<DModel> {
        if self.k == 0 {
            return None;
        }
        let m = self.build();
        if !self.advance() {
            self.k = 0;
            self.max_worlds = 0;
        }
        Some(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_single_world_models() {
        let atoms = [Atom::new("a")];
        assert_eq!(enumerate_dmodels(&atoms, 1).count(), 4);
        assert_eq!(enumerate_dmodels(&[], 1).count(), 2);
    }

    #[test]
    fn two_world_count_and_finiteness() {
        // 2 involutions x 2^8 relations x 2^2 valuations, plus the 4 size-1 models
        let atoms = [Atom::new("a")];
        assert_eq!(enumerate_dmodels(&atoms, 2).count(), 4 + 2 * 256 * 4);
    }

    #[test]
    fn enumeration_is_deterministic() {
        let atoms = [Atom::new("a"), Atom::new("b")];
        let a: Vec<_> = enumerate_dmodels(&atoms, 2).take(40).collect();
        let b: Vec<_> = enumerate_dmodels(&atoms, 2).take(40).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn involution_counts() {
        assert_eq!(involutions(1).len(), 1);
        assert_eq!(involutions(2).len(), 2);
        assert_eq!(involutions(3).len(), 4);
    }
}

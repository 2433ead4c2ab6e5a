use std::collections::HashMap;

use serde::Serialize;

use crate::perm::PermGroup;
use crate::{OracleError, MAX_GROUP_ORDER};

/// A subgroup as a sorted list of element indices into its [`PermGroup`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubgroupRecord {
    pub elements: Vec<u32>,
    pub order: usize,
    /// Elements generating the subgroup.
    pub generators: Vec<u32>,
    pub is_maximal: bool,
    /// Index of the conjugacy class in [`SubgroupLattice::classes`].
    pub class: usize,
    /// Element-order histogram as sorted `(element order, count)` pairs.
    pub signature: Vec<(u32, u32)>,
}

impl SubgroupRecord {
    pub fn contains(&self, x: u32) -> bool {
        self.elements.binary_search(&x).is_ok()
    }
}

#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    pub group_order: usize,
    pub subgroups: Vec<SubgroupRecord>,
    /// Members of each conjugacy class, by position in `subgroups`.
    pub classes: Vec<Vec<usize>>,
    /// Join rounds run, the last of which added nothing.
    pub rounds: usize,
    bits: Vec<Bits>,
}

type Bits = Vec<u64>;

fn bits_of(n: usize, elems: &[u32]) -> Bits {
    let mut b = vec![0u64; n.div_ceil(64)];
    for &e in elems {
        b[e as usize / 64] |= 1 << (e % 64);
    }
    b
}

fn has(b: &Bits, x: u32) -> bool {
    b[x as usize / 64] >> (x % 64) & 1 == 1
}

fn subset(a: &Bits, b: &Bits) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

struct Builder<'g> {
    g: &'g PermGroup,
    subgroups: Vec<SubgroupRecord>,
    bits: Vec<Bits>,
    seen: HashMap<Bits, usize>,
    classes: Vec<Vec<usize>>,
    element_orders: Vec<u32>,
}

impl<'g> Builder<'g> {
    /// Elements of the subgroup generated by `gens`, or `None` when it is the
    /// whole group.
    fn closure(&self, gens: &[u32]) -> Option<Vec<u32>> {
        let n = self.g.order();
        let mut mark = vec![0u64; n.div_ceil(64)];
        let id = self.g.identity();
        mark[id as usize / 64] |= 1 << (id % 64);
        let mut out = vec![id];
        let mut i = 0;
        while i < out.len() {
            let x = out[i];
            for &s in gens {
                let y = self.g.mul(x, s);
                if !has(&mark, y) {
                    mark[y as usize / 64] |= 1 << (y % 64);
                    out.push(y);
                    if 2 * out.len() > n {
                        return None;
                    }
                }
            }
            i += 1;
        }
        out.sort_unstable();
        Some(out)
    }

    /// Adds the subgroup and its conjugacy class. Returns false if already known.
    fn insert(&mut self, elements: Vec<u32>, generators: Vec<u32>) -> bool {
        let b = bits_of(self.g.order(), &elements);
        if self.seen.contains_key(&b) {
            return false;
        }
        let class = self.classes.len();
        let mut hist = std::collections::BTreeMap::new();
        for &x in &elements {
            *hist.entry(self.element_orders[x as usize]).or_insert(0u32) += 1;
        }
        let signature: Vec<(u32, u32)> = hist.into_iter().collect();
        let mut members = Vec::new();
        let mut frontier = vec![(elements, generators, b)];
        while let Some((elements, generators, b)) = frontier.pop() {
            let idx = self.subgroups.len();
            self.seen.insert(b.clone(), idx);
            members.push(idx);
            for &t in self.g.generators() {
                let mut conj: Vec<u32> = elements.iter().map(|&x| self.g.conj(t, x)).collect();
                conj.sort_unstable();
                let cb = bits_of(self.g.order(), &conj);
                if !self.seen.contains_key(&cb) && !frontier.iter().any(|f| f.2 == cb) {
                    let cg = generators.iter().map(|&x| self.g.conj(t, x)).collect();
                    frontier.push((conj, cg, cb));
                }
            }
            self.subgroups.push(SubgroupRecord {
                order: elements.len(),
                elements,
                generators,
                is_maximal: false,
                class,
                signature: signature.clone(),
            });
            self.bits.push(b);
        }
        self.classes.push(members);
        true
    }
}

/// Every subgroup of `g`: cyclic subgroups first, then joins of each class
/// representative with each cyclic subgroup, repeated until a round finds
/// nothing new.
pub fn subgroup_lattice(g: &PermGroup) -> Result<SubgroupLattice, OracleError> {
    let n = g.order();
    if n > MAX_GROUP_ORDER {
        return Err(OracleError::TooLarge(n));
    }
    let mut b = Builder {
        g,
        subgroups: Vec::new(),
        bits: Vec::new(),
        seen: HashMap::new(),
        classes: Vec::new(),
        element_orders: (0..n as u32).map(|x| g.element_order(x) as u32).collect(),
    };
    let mut cyclic_gens = Vec::new();
    let mut cyclic_seen = vec![false; n];
    for a in 0..n as u32 {
        let elems = b.closure(&[a]).expect("cyclic subgroups are proper");
        let key = bits_of(n, &elems);
        if !b.seen.contains_key(&key) {
            b.insert(elems, vec![a]);
        }
        let idx = b.seen[&key];
        if !cyclic_seen[idx] {
            cyclic_seen[idx] = true;
            cyclic_gens.push((a, idx));
        }
    }
    let all: Vec<u32> = (0..n as u32).collect();
    b.insert(all, g.generators().to_vec());
    let whole = b.subgroups.len() - 1;

    let mut rounds = 0;
    loop {
        rounds += 1;
        let reps: Vec<usize> = b.classes.iter().map(|c| c[0]).collect();
        let mut grew = false;
        for r in reps {
            if r == whole {
                continue;
            }
            for &(c, c_idx) in &cyclic_gens {
                if has(&b.bits[r], c) {
                    continue;
                }
                if subset(&b.bits[r], &b.bits[c_idx]) {
                    continue;
                }
                let mut gens = b.subgroups[r].generators.clone();
                gens.push(c);
                if let Some(elems) = b.closure(&gens) {
                    grew |= b.insert(elems, gens);
                }
            }
        }
        if !grew {
            break;
        }
    }

    let proper: Vec<usize> = (0..b.subgroups.len()).filter(|&i| i != whole).collect();
    for class in &b.classes {
        let k = class[0];
        if k == whole {
            continue;
        }
        let order = b.subgroups[k].order;
        let maximal = !proper.iter().any(|&l| {
            let lo = b.subgroups[l].order;
            lo > order && lo % order == 0 && subset(&b.bits[k], &b.bits[l])
        });
        for &m in class {
            b.subgroups[m].is_maximal = maximal;
        }
    }

    Ok(SubgroupLattice {
        group_order: n,
        subgroups: b.subgroups,
        classes: b.classes,
        rounds,
        bits: b.bits,
    })
}

impl SubgroupLattice {
    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    /// Whether subgroup `a` is contained in subgroup `b`.
    pub fn is_subgroup_of(&self, a: usize, b: usize) -> bool {
        subset(&self.bits[a], &self.bits[b])
    }

    /// Orders of one representative per conjugacy class of maximal subgroups.
    pub fn maximal_class_orders(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .classes
            .iter()
            .map(|c| &self.subgroups[c[0]])
            .filter(|s| s.is_maximal)
            .map(|s| s.order)
            .collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    pub fn count_of_order(&self, order: usize) -> usize {
        self.subgroups.iter().filter(|s| s.order == order).count()
    }
}

/// All maximal subgroups, every conjugate included.
pub fn maximal_subgroups(lattice: &SubgroupLattice) -> Vec<&SubgroupRecord> {
    lattice.subgroups.iter().filter(|s| s.is_maximal).collect()
}

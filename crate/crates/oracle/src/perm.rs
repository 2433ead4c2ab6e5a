use std::collections::VecDeque;

use crate::OracleError;

/// A permutation of the points `0..q` of `PG(1,q)`, with `q` standing for infinity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(points: usize) -> Self {
        Perm((0..points as u8).collect())
    }

    pub fn from_images(images: Vec<u8>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            let slot = seen.get_mut(i as usize)?;
            if *slot {
                return None;
            }
            *slot = true;
        }
        Some(Perm(images))
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    pub fn apply(&self, x: u8) -> u8 {
        self.0[x as usize]
    }

    /// `self` after `other`: `x -> self(other(x))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut out = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            out[x as usize] = i as u8;
        }
        Perm(out)
    }
}

/// A permutation group listed element by element.
///
/// Elements of `PSL(2,q)` are determined by the images of infinity, 0 and 1,
/// so products are found by table lookup on those three points.
#[derive(Clone, Debug)]
pub struct PermGroup {
    q: u64,
    elements: Vec<Perm>,
    index: Vec<u32>,
    inverses: Vec<u32>,
    generators: Vec<u32>,
}

impl PermGroup {
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: u32) -> &Perm {
        &self.elements[i as usize]
    }

    pub fn identity(&self) -> u32 {
        0
    }

    /// The two generators the group was built from.
    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    fn key(&self, a: u8, b: u8, c: u8) -> usize {
        let n = self.q as usize + 1;
        (a as usize * n + b as usize) * n + c as usize
    }

    /// Index of a permutation in the element list.
    pub fn index_of(&self, p: &Perm) -> Option<u32> {
        let inf = self.q as usize;
        let i = self.index[self.key(p.0[inf], p.0[0], p.0[1])];
        (i != u32::MAX && self.elements[i as usize] == *p).then_some(i)
    }

    /// Index of `a * b`, meaning `b` first, then `a`.
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        let pa = &self.elements[a as usize];
        let pb = &self.elements[b as usize];
        let inf = self.q as usize;
        let k = self.key(
            pa.apply(pb.0[inf]),
            pa.apply(pb.0[0]),
            pa.apply(pb.0[1]),
        );
        self.index[k]
    }

    pub fn inv(&self, a: u32) -> u32 {
        self.inverses[a as usize]
    }

    /// `g a g^-1`.
    pub fn conj(&self, g: u32, a: u32) -> u32 {
        self.mul(self.mul(g, a), self.inv(g))
    }

    pub fn element_order(&self, a: u32) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity() {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }
}

/// `PSL(2,q)` for a prime `5 <= q <= 23`, generated by `z -> z + 1` and
/// `z -> -1/z`.
pub fn build_psl2(q: u64) -> Result<PermGroup, OracleError> {
    if !(2..=u8::MAX as u64).contains(&q) || !(2..q).all(|d| q % d != 0) {
        return Err(OracleError::NotPrime(q));
    }
    if !(5..=23).contains(&q) {
        return Err(OracleError::OutOfRange(q));
    }
    let inf = q as u8;
    let points = q as usize + 1;
    let field_inv = |x: u64| (1..q).find(|y| x * y % q == 1).expect("field");
    let t: Vec<u8> = (0..=q)
        .map(|z| if z == q { inf } else { ((z + 1) % q) as u8 })
        .collect();
    let s: Vec<u8> = (0..=q)
        .map(|z| match z {
            0 => inf,
            z if z == q => 0,
            z => ((q - field_inv(z)) % q) as u8,
        })
        .collect();
    let gens = [Perm(t), Perm(s)];

    let id = Perm::identity(points);
    let mut elements = vec![id.clone()];
    let mut index = vec![u32::MAX; points * points * points];
    let key = |p: &Perm| (p.0[q as usize] as usize * points + p.0[0] as usize) * points + p.0[1] as usize;
    index[key(&id)] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in &gens {
            let p = g.compose(&elements[i]);
            let k = key(&p);
            if index[k] == u32::MAX {
                index[k] = elements.len() as u32;
                queue.push_back(elements.len());
                elements.push(p);
            } else {
                debug_assert_eq!(elements[index[k] as usize], p);
            }
        }
    }
    let expected = (q * (q * q - 1) / 2) as usize;
    assert_eq!(elements.len(), expected, "|PSL(2,{q})|");
    let mut group = PermGroup {
        q,
        elements,
        index,
        inverses: Vec::new(),
        generators: Vec::new(),
    };
    group.inverses = group
        .elements
        .iter()
        .map(|p| group.index_of(&p.inverse()).expect("closed under inverse"))
        .collect();
    group.generators = gens
        .iter()
        .map(|p| group.index_of(p).expect("generator"))
        .collect();
    Ok(group)
}

//! The canonical tensor product `X ⊗ X`: orbits of `X × X` under the
//! diagonal right action `(a, b) . y = (a * y, b * y)` of the free group on
//! `X`, together with the involutions `tau` and `rho` on the orbit set and
//! the quotients they generate.
//!
//! Each right translation is a permutation of a finite set, so the orbits
//! of the generators `y` alone already coincide with the orbits of the
//! whole free group; the `~` translations never need to be swept.

use std::fmt;

use crate::dihedral;
use crate::error::{Error, InvolutionViolation, Result};
use crate::hom::QuandleHom;
use crate::involution::{satisfies_s1, GoodInvolution};
use crate::quandle::{Element, Quandle};
use crate::uf::UnionFind;

pub type Pair = (Element, Element);
pub type ClassId = usize;

#[derive(Clone, Debug)]
pub struct TensorProduct {
    quandle: Quandle,
    class_of: Vec<u32>,
    classes: Vec<Vec<Pair>>,
    reps: Vec<Pair>,
}

/// Orbit partition of `q × q`, classes numbered by their lexicographically
/// smallest pair.
pub fn tensor_product(q: &Quandle) -> TensorProduct {
    let n = q.len();
    let mut uf = UnionFind::new(n * n);
    sweep(q, 0..n, &mut uf);
    TensorProduct::from_union_find(q.clone(), uf)
}

/// Same partition as [`tensor_product`], with the generator sweep split
/// across `threads` workers. The result does not depend on the thread count.
pub fn tensor_product_parallel(q: &Quandle, threads: usize) -> TensorProduct {
    let n = q.len();
    let threads = threads.clamp(1, n.max(1));
    if threads == 1 {
        return tensor_product(q);
    }
    let chunk = n.div_ceil(threads);
    let partial: Vec<UnionFind> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..threads)
            .map(|t| {
                let lo = (t * chunk).min(n);
                let hi = ((t + 1) * chunk).min(n);
                s.spawn(move || {
                    let mut uf = UnionFind::new(n * n);
                    sweep(q, lo..hi, &mut uf);
                    uf
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("sweep worker panicked"))
            .collect()
    });
    let mut merged = UnionFind::new(n * n);
    for mut uf in partial {
        for i in 0..n * n {
            let root = uf.find(i);
            merged.union(i, root);
        }
    }
    TensorProduct::from_union_find(q.clone(), merged)
}

fn sweep(q: &Quandle, generators: std::ops::Range<Element>, uf: &mut UnionFind) {
    let n = q.len();
    let mut column = vec![0usize; n];
    for y in generators {
        for (x, slot) in column.iter_mut().enumerate() {
            *slot = q.star(x, y);
        }
        for a in 0..n {
            let row = column[a] * n;
            let src = a * n;
            for b in 0..n {
                uf.union(src + b, row + column[b]);
            }
        }
    }
}

impl TensorProduct {
    fn from_union_find(quandle: Quandle, mut uf: UnionFind) -> TensorProduct {
        let n = quandle.len();
        let (class_of, count) = uf.canonical_labels();
        let mut classes: Vec<Vec<Pair>> = vec![Vec::new(); count];
        for (idx, &c) in class_of.iter().enumerate() {
            classes[c as usize].push((idx / n, idx % n));
        }
        let reps = classes.iter().map(|c| c[0]).collect();
        TensorProduct {
            quandle,
            class_of,
            classes,
            reps,
        }
    }

    pub fn quandle(&self) -> &Quandle {
        &self.quandle
    }

    /// Size of the underlying carrier.
    pub fn n(&self) -> usize {
        self.quandle.len()
    }

    /// Number of classes.
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Vec<Pair>] {
        &self.classes
    }

    pub fn class(&self, id: ClassId) -> &[Pair] {
        &self.classes[id]
    }

    pub fn reps(&self) -> &[Pair] {
        &self.reps
    }

    #[inline]
    pub fn class_id(&self, a: Element, b: Element) -> ClassId {
        self.class_of[a * self.n() + b] as ClassId
    }

    pub fn class_of(&self, a: Element, b: Element) -> Result<ClassId> {
        Ok(self.class_id(self.quandle.check(a)?, self.quandle.check(b)?))
    }

    /// Class names: closed-form labels for quandles built by the dihedral
    /// constructors, canonical representatives `[a,b]` otherwise.
    pub fn labels(&self) -> Vec<String> {
        self.reps
            .iter()
            .map(|&(a, b)| match dihedral::label_for_pair(self.quandle.family(), a, b) {
                Some(label) => label.to_string(),
                None => format!("[{a},{b}]"),
            })
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum InvolutionKind {
    Tau,
    Rho,
}

impl InvolutionKind {
    pub fn name(self) -> &'static str {
        match self {
            InvolutionKind::Tau => "tau",
            InvolutionKind::Rho => "rho",
        }
    }
}

impl fmt::Display for InvolutionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An involution of the class set of a tensor product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassInvolution {
    kind: InvolutionKind,
    map: Vec<ClassId>,
}

impl ClassInvolution {
    pub fn kind(&self) -> InvolutionKind {
        self.kind
    }

    pub fn map(&self) -> &[ClassId] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, c: ClassId) -> ClassId {
        self.map[c]
    }

    /// 1 for the identity, 2 otherwise.
    pub fn order(&self) -> u8 {
        if self.map.iter().enumerate().all(|(i, &c)| i == c) {
            1
        } else {
            2
        }
    }
}

/// Descends a pair map to classes, checking every pair of every class.
fn descend(t: &TensorProduct, kind: InvolutionKind, pair_map: impl Fn(Pair) -> Pair) -> Result<ClassInvolution> {
    let mut map = Vec::with_capacity(t.len());
    for (id, class) in t.classes.iter().enumerate() {
        let (a, b) = pair_map(t.reps[id]);
        let image = t.class_id(a, b);
        for &pair in class {
            let (a, b) = pair_map(pair);
            if t.class_id(a, b) != image {
                return Err(Error::Internal(format!(
                    "{kind} does not descend: class {id} splits at {pair:?}"
                )));
            }
        }
        map.push(image);
    }
    if (0..map.len()).any(|c| map[map[c]] != c) {
        return Err(Error::Internal(format!("{kind} is not an involution on classes")));
    }
    Ok(ClassInvolution { kind, map })
}

/// `[a, b] -> [b, a]`.
pub fn tau_map(t: &TensorProduct) -> ClassInvolution {
    descend(t, InvolutionKind::Tau, |(a, b)| (b, a)).expect("coordinate swap commutes with the diagonal action")
}

/// `[a, b] -> [rho a, rho b]`. Rejects involutions that fail S1, since only
/// those descend to the class set.
pub fn rho_map(t: &TensorProduct, rho: &GoodInvolution) -> Result<ClassInvolution> {
    rho_map_raw(t, rho.map())
}

/// As [`rho_map`] for an arbitrary involution array; S1 is the only
/// condition needed for descent.
pub fn rho_map_raw(t: &TensorProduct, rho: &[Element]) -> Result<ClassInvolution> {
    let q = &t.quandle;
    if rho.len() != q.len() {
        return Err(Error::SizeMismatch {
            expected: q.len(),
            got: rho.len(),
        });
    }
    if let Some(&value) = rho.iter().find(|&&v| v >= q.len()) {
        return Err(Error::OutOfRange { value, n: q.len() });
    }
    if let Some(x) = (0..q.len()).find(|&x| rho[rho[x]] != x) {
        return Err(Error::Involution(vec![InvolutionViolation::NotInvolution { x }]));
    }
    if !satisfies_s1(q, rho) {
        let witness = (0..q.len())
            .flat_map(|x| (0..q.len()).map(move |y| (x, y)))
            .find(|&(x, y)| rho[q.star(x, y)] != q.star(rho[x], y))
            .expect("S1 failure has a witness");
        return Err(Error::Involution(vec![InvolutionViolation::S1 {
            x: witness.0,
            y: witness.1,
        }]));
    }
    descend(t, InvolutionKind::Rho, |(a, b)| (rho[a], rho[b]))
}

/// Orbits of class ids under the group generated by some class involutions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientSet {
    generators: Vec<InvolutionKind>,
    blocks: Vec<Vec<ClassId>>,
    block_of: Vec<usize>,
}

impl QuotientSet {
    pub fn generators(&self) -> &[InvolutionKind] {
        &self.generators
    }

    pub fn blocks(&self) -> &[Vec<ClassId>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_of(&self, class: ClassId) -> usize {
        self.block_of[class]
    }

    /// `"tau"`, `"rho"`, `"tau,rho"`, or `""` for the trivial quotient.
    pub fn name(&self) -> String {
        self.generators.iter().map(|g| g.name()).collect::<Vec<_>>().join(",")
    }
}

pub fn quotient(t: &TensorProduct, invs: &[&ClassInvolution]) -> QuotientSet {
    let mut uf = UnionFind::new(t.len());
    for inv in invs {
        assert_eq!(inv.map.len(), t.len(), "involution belongs to another tensor product");
        for c in 0..t.len() {
            uf.union(c, inv.apply(c));
        }
    }
    let (labels, _) = uf.canonical_labels();
    let blocks = uf.blocks();
    let mut generators: Vec<InvolutionKind> = invs.iter().map(|i| i.kind).collect();
    generators.sort();
    generators.dedup();
    QuotientSet {
        generators,
        blocks,
        block_of: labels.into_iter().map(|l| l as usize).collect(),
    }
}

/// `f ⊗ f : [a, b] -> [f a, f b]` as a map of class ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedMap {
    map: Vec<ClassId>,
}

impl InducedMap {
    pub fn map(&self) -> &[ClassId] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, c: ClassId) -> ClassId {
        self.map[c]
    }

    /// True when `self . source_inv = target_inv . self`.
    pub fn commutes_with(&self, source_inv: &ClassInvolution, target_inv: &ClassInvolution) -> bool {
        (0..self.map.len()).all(|c| self.map[source_inv.apply(c)] == target_inv.apply(self.map[c]))
    }

    /// The induced map on quotient blocks, if the class map respects them.
    pub fn on_blocks(&self, source: &QuotientSet, target: &QuotientSet) -> Option<Vec<usize>> {
        source
            .blocks()
            .iter()
            .map(|block| {
                let image = target.block_of(self.map[block[0]]);
                block
                    .iter()
                    .all(|&c| target.block_of(self.map[c]) == image)
                    .then_some(image)
            })
            .collect()
    }
}

pub fn induced_map(f: &QuandleHom, tx: &TensorProduct, ty: &TensorProduct) -> Result<InducedMap> {
    if tx.quandle != *f.source() || ty.quandle != *f.target() {
        return Err(Error::Internal(
            "tensor products are not built over the homomorphism's quandles".into(),
        ));
    }
    let mut map = Vec::with_capacity(tx.len());
    for (id, class) in tx.classes.iter().enumerate() {
        let (a, b) = tx.reps[id];
        let image = ty.class_id(f.apply(a), f.apply(b));
        if let Some(&(a, b)) = class
            .iter()
            .find(|&&(a, b)| ty.class_id(f.apply(a), f.apply(b)) != image)
        {
            return Err(Error::Internal(format!(
                "f ⊗ f is not constant on class {id}: ({a}, {b}) escapes"
            )));
        }
        map.push(image);
    }
    Ok(InducedMap { map })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hom::validate_hom;
    use crate::involution::{identity_involution, symmetric_double, validate_good_involution};
    use crate::quandle::{make_dihedral, make_trivial};

    #[test]
    fn r3_has_two_classes() {
        let t = tensor_product(&make_dihedral(3).unwrap());
        assert_eq!(t.len(), 2);
        assert_eq!(t.class(0), &[(0, 0), (1, 1), (2, 2)]);
        assert_eq!(t.class(1), &[(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)]);
        assert_eq!(t.reps(), &[(0, 0), (0, 1)]);
        assert_eq!(t.class_of(1, 1).unwrap(), t.class_of(0, 0).unwrap());
        assert_eq!(t.class_of(2, 0).unwrap(), t.class_of(0, 1).unwrap());
        assert!(t.class_of(3, 0).is_err());
    }

    #[test]
    fn trivial_quandle_has_singleton_classes() {
        for n in 1..6 {
            let t = tensor_product(&make_trivial(n).unwrap());
            assert_eq!(t.len(), n * n);
            assert!(t.classes().iter().all(|c| c.len() == 1));
        }
    }

    #[test]
    fn r4_has_six_classes() {
        assert_eq!(tensor_product(&make_dihedral(4).unwrap()).len(), 6);
    }

    #[test]
    fn parallel_sweep_matches_serial() {
        let q = make_dihedral(12).unwrap();
        let (d, _) = symmetric_double(&q);
        for threads in [1, 2, 3, 7, 64] {
            let a = tensor_product(&d);
            let b = tensor_product_parallel(&d, threads);
            assert_eq!(a.classes(), b.classes());
        }
    }

    #[test]
    fn tau_on_r3_and_r4() {
        let t3 = tensor_product(&make_dihedral(3).unwrap());
        let tau = tau_map(&t3);
        assert_eq!(tau.map(), &[0, 1]);
        assert_eq!(tau.order(), 1);

        let t4 = tensor_product(&make_dihedral(4).unwrap());
        let tau = tau_map(&t4);
        let e1_0 = t4.class_of(0, 1).unwrap();
        let e1_1 = t4.class_of(1, 2).unwrap();
        assert_ne!(e1_0, e1_1);
        assert_eq!(tau.apply(e1_0), e1_1);
        assert_eq!(tau.order(), 2);
        for a in 0..4 {
            let c = t4.class_id(a, a);
            assert_eq!(tau.apply(c), c);
        }
    }

    #[test]
    fn rho_identity_and_shift() {
        let r4 = make_dihedral(4).unwrap();
        let t = tensor_product(&r4);
        let id = identity_involution(&r4).unwrap();
        assert_eq!(rho_map(&t, &id).unwrap().order(), 1);
        let shift = validate_good_involution(&r4, &[2, 3, 0, 1]).unwrap();
        let rho = rho_map(&t, &shift).unwrap();
        assert_eq!(rho.map(), (0..t.len()).collect::<Vec<_>>().as_slice());
    }

    #[test]
    fn rho_rejects_s1_failures() {
        let r3 = make_dihedral(3).unwrap();
        let t = tensor_product(&r3);
        // (0 1) fails S1: rho(0*0) = 1 but rho(0)*0 = 1*0 = 2
        assert!(matches!(rho_map_raw(&t, &[1, 0, 2]), Err(Error::Involution(_))));
        assert!(matches!(rho_map_raw(&t, &[1, 2, 0]), Err(Error::Involution(_))));
        assert!(matches!(rho_map_raw(&t, &[0, 1]), Err(Error::SizeMismatch { .. })));
    }

    #[test]
    fn double_r3_rho_swaps_signs() {
        let (d, rho) = symmetric_double(&make_dihedral(3).unwrap());
        let t = tensor_product(&d);
        assert_eq!(t.len(), 8);
        let r = rho_map(&t, &rho).unwrap();
        for k in 0..2 {
            assert_eq!(r.apply(t.class_id(0, k)), t.class_id(3, 3 + k));
            assert_eq!(r.apply(t.class_id(0, 3 + k)), t.class_id(3, k));
        }
    }

    #[test]
    fn quotients() {
        let t = tensor_product(&make_dihedral(3).unwrap());
        let tau = tau_map(&t);
        assert_eq!(quotient(&t, &[&tau]).len(), 2);
        let trivial = quotient(&t, &[]);
        assert_eq!(trivial.blocks(), &[vec![0], vec![1]]);
        assert_eq!(trivial.name(), "");

        let (d, rho) = symmetric_double(&make_dihedral(3).unwrap());
        let td = tensor_product(&d);
        let tau = tau_map(&td);
        let rho = rho_map(&td, &rho).unwrap();
        let q = quotient(&td, &[&tau, &rho]);
        assert_eq!(q.len(), 4);
        assert_eq!(q.name(), "tau,rho");
        assert_eq!(quotient(&td, &[&rho, &tau]).name(), "tau,rho");
    }

    #[test]
    fn induced_maps() {
        let r3 = make_dihedral(3).unwrap();
        let t3 = tensor_product(&r3);
        let id = validate_hom(&[0, 1, 2], &r3, &r3).unwrap();
        assert_eq!(induced_map(&id, &t3, &t3).unwrap().map(), &[0, 1]);

        let (d, _) = symmetric_double(&r3);
        let td = tensor_product(&d);
        let incl = validate_hom(&[0, 1, 2], &r3, &d).unwrap();
        let m = induced_map(&incl, &t3, &td).unwrap();
        assert_eq!(m.apply(0), td.class_id(0, 0));
        assert_eq!(m.apply(1), td.class_id(0, 1));

        let t2 = make_trivial(2).unwrap();
        let t1 = make_trivial(1).unwrap();
        let f = validate_hom(&[0, 0], &t2, &t1).unwrap();
        let m = induced_map(&f, &tensor_product(&t2), &tensor_product(&t1)).unwrap();
        assert_eq!(m.map(), &[0, 0, 0, 0]);

        // Wrong tensor product for the source.
        assert!(induced_map(&f, &t3, &tensor_product(&t1)).is_err());
    }

    #[test]
    fn dihedral_labels_in_reports() {
        let t = tensor_product(&make_dihedral(4).unwrap());
        assert_eq!(
            t.labels(),
            vec!["E(0)_0", "E(1)_0", "E(2)_0", "E(1)_1", "E(0)_1", "E(2)_1"]
        );
        let t = tensor_product(&make_trivial(2).unwrap());
        assert_eq!(t.labels(), vec!["[0,0]", "[0,1]", "[1,0]", "[1,1]"]);
    }
}

use crate::error::{Error, Result};
use crate::group::{ElementId, GroupTable, ReflClass};

use super::{ClassSignature, Refl};

/// The reflections of a group with precomputed conjugation tables, so that
/// Hurwitz moves become two table lookups.
#[derive(Clone, Debug)]
pub struct ReflectionSystem {
    table: GroupTable,
    elem_refl: Vec<Option<Refl>>,
    inverse: Vec<Refl>,
    /// `[x * n + y] = y^-1 x y`
    fwd: Vec<Refl>,
    /// `[x * n + y] = x y x^-1`
    back: Vec<Refl>,
}

impl ReflectionSystem {
    pub fn new(table: GroupTable) -> Result<Self> {
        let n = table.reflections().len();
        if n > 16 {
            return Err(Error::TooManyReflections { count: n });
        }
        let mut elem_refl = vec![None; table.len()];
        for (i, &r) in table.reflections().iter().enumerate() {
            elem_refl[r.index()] = Some(Refl(i as u8));
        }
        let lookup = |e: ElementId| elem_refl[e.index()].expect("conjugate of a reflection");
        let refls = table.reflections();
        let inverse = refls.iter().map(|&r| lookup(table.inv(r))).collect();
        let mut fwd = Vec::with_capacity(n * n);
        let mut back = Vec::with_capacity(n * n);
        for &x in refls {
            for &y in refls {
                fwd.push(lookup(table.conj(x, y)));
                back.push(lookup(table.mul(table.mul(x, y), table.inv(x))));
            }
        }
        Ok(ReflectionSystem {
            table,
            elem_refl,
            inverse,
            fwd,
            back,
        })
    }

    pub fn table(&self) -> &GroupTable {
        &self.table
    }

    pub fn len(&self) -> usize {
        self.inverse.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inverse.is_empty()
    }

    pub fn all(&self) -> impl Iterator<Item = Refl> {
        (0..self.len() as u8).map(Refl)
    }

    pub fn element(&self, r: Refl) -> ElementId {
        self.table.reflections()[r.index()]
    }

    pub fn refl_of(&self, e: ElementId) -> Option<Refl> {
        self.elem_refl[e.index()]
    }

    pub fn class(&self, r: Refl) -> ReflClass {
        self.table.refl_class(r.index())
    }

    pub fn sub_class(&self, r: Refl) -> Option<u8> {
        self.table.sub_class(r.index())
    }

    pub fn inverse(&self, r: Refl) -> Refl {
        self.inverse[r.index()]
    }

    pub fn class_members(&self, class: ReflClass) -> Vec<Refl> {
        self.all().filter(|&r| self.class(r) == class).collect()
    }

    /// `sigma`: `(x, y) -> (y, y^-1 x y)`.
    #[inline]
    pub fn forward_pair(&self, x: Refl, y: Refl) -> (Refl, Refl) {
        (y, self.fwd[x.index() * self.len() + y.index()])
    }

    /// `sigma^-1`: `(x, y) -> (x y x^-1, x)`.
    #[inline]
    pub fn inverse_pair(&self, x: Refl, y: Refl) -> (Refl, Refl) {
        (self.back[x.index() * self.len() + y.index()], x)
    }

    /// `y^-1 x y` as a reflection.
    pub fn conj(&self, x: Refl, y: Refl) -> Refl {
        self.fwd[x.index() * self.len() + y.index()]
    }

    pub fn product(&self, refls: &[Refl]) -> ElementId {
        self.table.product(refls.iter().map(|&r| self.element(r)))
    }

    pub fn signature(&self, refls: &[Refl]) -> ClassSignature {
        let mut sig = ClassSignature::default();
        for &r in refls {
            match self.class(r) {
                ReflClass::R1 => sig.n += 1,
                ReflClass::R2 => sig.m += 1,
                ReflClass::S => sig.k += 1,
            }
        }
        sig
    }
}

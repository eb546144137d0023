//! Finite matrix groups over Q(g): closure, multiplication tables and the
//! reflection annotations needed by the Hurwitz engine.

pub mod classes;
pub mod g6;
pub mod regular;
pub mod subgroups;

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cyclo::CycloNum;
use crate::error::{Error, Result};
use crate::matrix::Mat2;

pub use classes::{conjugacy_classes, sub_conjugacy_classes};
pub use regular::regular_and_coxeter_elements;
pub use subgroups::{g422_check, g4_check, subgroup_closure, G422Report, G4Report, Orientation};

/// Default guard against generator lists that do not close up.
pub const DEFAULT_ELEMENT_CAP: usize = 1_000_000;

/// Index of an element in a [`GroupTable`]. The identity is always `ElementId(0)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ElementId(pub u32);

impl ElementId {
    pub const IDENTITY: ElementId = ElementId(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Conjugacy class of a reflection, labelled by determinant:
/// `zeta` for `R1`, `zeta^2` for `R2`, `-1` for `S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ReflClass {
    R1,
    R2,
    S,
}

impl ReflClass {
    pub const ALL: [ReflClass; 3] = [ReflClass::R1, ReflClass::R2, ReflClass::S];

    pub fn from_det(det: &CycloNum) -> Option<ReflClass> {
        if *det == CycloNum::zeta() {
            Some(ReflClass::R1)
        } else if *det == CycloNum::gamma_pow(8) {
            Some(ReflClass::R2)
        } else if *det == CycloNum::from_int(-1) {
            Some(ReflClass::S)
        } else {
            None
        }
    }

    pub fn rank(self) -> usize {
        self as usize
    }
}

impl fmt::Display for ReflClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ReflClass::R1 => "R1",
            ReflClass::R2 => "R2",
            ReflClass::S => "S",
        };
        f.write_str(s)
    }
}

/// `t != I` and `det(t - I) = 0`; in rank 2 this is a one-dimensional fixed space.
pub fn is_reflection(t: &Mat2) -> bool {
    !t.is_identity() && t.sub(&Mat2::identity()).det().is_zero()
}

/// A fully materialized finite group with its reflection data.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroupTable {
    elements: Vec<Mat2>,
    /// Row-major `n * n` multiplication table.
    mul: Vec<ElementId>,
    inv: Vec<ElementId>,
    order: Vec<u32>,
    det: Vec<CycloNum>,
    reflections: Vec<ElementId>,
    refl_class: Vec<ReflClass>,
    /// 1-based sub-class label for each `S` reflection.
    sub_class: Vec<Option<u8>>,
    generator_ids: Vec<ElementId>,
    coxeter_ids: Vec<ElementId>,
    coxeter_number: u32,
    rank: u32,
}

impl GroupTable {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = ElementId> {
        (0..self.elements.len() as u32).map(ElementId)
    }

    pub fn element(&self, x: ElementId) -> &Mat2 {
        &self.elements[x.index()]
    }

    pub fn elements(&self) -> &[Mat2] {
        &self.elements
    }

    pub fn find(&self, m: &Mat2) -> Option<ElementId> {
        self.elements.iter().position(|e| e == m).map(|i| ElementId(i as u32))
    }

    #[inline]
    pub fn mul(&self, x: ElementId, y: ElementId) -> ElementId {
        self.mul[x.index() * self.elements.len() + y.index()]
    }

    pub fn inv(&self, x: ElementId) -> ElementId {
        self.inv[x.index()]
    }

    /// `y^-1 x y`.
    pub fn conj(&self, x: ElementId, y: ElementId) -> ElementId {
        self.mul(self.mul(self.inv(y), x), y)
    }

    pub fn product(&self, xs: impl IntoIterator<Item = ElementId>) -> ElementId {
        xs.into_iter().fold(ElementId::IDENTITY, |acc, x| self.mul(acc, x))
    }

    pub fn pow(&self, x: ElementId, e: u32) -> ElementId {
        (0..e).fold(ElementId::IDENTITY, |acc, _| self.mul(acc, x))
    }

    pub fn order(&self, x: ElementId) -> u32 {
        self.order[x.index()]
    }

    pub fn det(&self, x: ElementId) -> &CycloNum {
        &self.det[x.index()]
    }

    pub fn commutes(&self, x: ElementId, y: ElementId) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    /// Reflections in canonical order: by class, then discovery order.
    pub fn reflections(&self) -> &[ElementId] {
        &self.reflections
    }

    /// Class of the reflection with canonical index `i`.
    pub fn refl_class(&self, i: usize) -> ReflClass {
        self.refl_class[i]
    }

    /// 1-based sub-class of the canonical reflection `i`, for `S` reflections.
    pub fn sub_class(&self, i: usize) -> Option<u8> {
        self.sub_class[i]
    }

    pub fn reflection_index(&self, x: ElementId) -> Option<usize> {
        self.reflections.iter().position(|&r| r == x)
    }

    pub fn is_reflection_id(&self, x: ElementId) -> bool {
        self.reflection_index(x).is_some()
    }

    pub fn generator_ids(&self) -> &[ElementId] {
        &self.generator_ids
    }

    pub fn coxeter_ids(&self) -> &[ElementId] {
        &self.coxeter_ids
    }

    pub fn coxeter_number(&self) -> u32 {
        self.coxeter_number
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn class_members(&self, class: ReflClass) -> Vec<ElementId> {
        self.reflections
            .iter()
            .zip(&self.refl_class)
            .filter(|(_, &c)| c == class)
            .map(|(&r, _)| r)
            .collect()
    }
}

/// Builds the group generated by `generators`.
///
/// Breadth-first closure seeded with the identity; each dequeued element is
/// right-multiplied by the generators in order and new elements get the next ID.
pub fn build_group_table(generators: &[Mat2]) -> Result<GroupTable> {
    build_group_table_capped(generators, DEFAULT_ELEMENT_CAP)
}

pub fn build_group_table_capped(generators: &[Mat2], cap: usize) -> Result<GroupTable> {
    for g in generators {
        if g.det().is_zero() {
            return Err(Error::SingularMatrix);
        }
    }
    let mut elements = vec![Mat2::identity()];
    let mut index: HashMap<Mat2, u32> = HashMap::from([(Mat2::identity(), 0)]);
    // word[x] = (parent, generator) with x = parent * gen
    let mut word: Vec<Option<(u32, usize)>> = vec![None];
    let mut right: Vec<Vec<u32>> = Vec::new();
    let mut queue = VecDeque::from([0u32]);
    while let Some(x) = queue.pop_front() {
        let mut row = Vec::with_capacity(generators.len());
        for (gi, g) in generators.iter().enumerate() {
            let y = elements[x as usize].mul(g);
            let id = match index.get(&y) {
                Some(&id) => id,
                None => {
                    if elements.len() >= cap {
                        return Err(Error::ClosureCapExceeded { cap });
                    }
                    let id = elements.len() as u32;
                    index.insert(y.clone(), id);
                    elements.push(y);
                    word.push(Some((x, gi)));
                    queue.push_back(id);
                    id
                }
            };
            row.push(id);
        }
        right.push(row);
    }
    let n = elements.len();

    // mul[x][y] follows y's discovery word starting from x; IDs are BFS-ordered so
    // y's parent always precedes y.
    let mut mul = vec![ElementId(0); n * n];
    for x in 0..n {
        mul[x * n] = ElementId(x as u32);
        for y in 1..n {
            let (parent, gi) = word[y].expect("non-identity elements have a word");
            let xp = mul[x * n + parent as usize];
            mul[x * n + y] = ElementId(right[xp.index()][gi]);
        }
    }
    let mut inv = vec![ElementId(0); n];
    for x in 0..n {
        inv[x] = (0..n)
            .map(|y| ElementId(y as u32))
            .find(|&y| mul[x * n + y.index()] == ElementId::IDENTITY)
            .expect("finite group elements are invertible");
    }
    let order: Vec<u32> = (0..n)
        .map(|x| {
            let mut k = 1;
            let mut p = ElementId(x as u32);
            while p != ElementId::IDENTITY {
                p = mul[p.index() * n + x];
                k += 1;
            }
            k
        })
        .collect();
    let det: Vec<CycloNum> = elements.iter().map(Mat2::det).collect();
    let generator_ids = generators
        .iter()
        .map(|g| ElementId(index[g]))
        .collect();

    let mut table = GroupTable {
        elements,
        mul,
        inv,
        order,
        det,
        reflections: Vec::new(),
        refl_class: Vec::new(),
        sub_class: Vec::new(),
        generator_ids,
        coxeter_ids: Vec::new(),
        coxeter_number: 0,
        rank: 2,
    };
    annotate_reflections(&mut table)?;
    let (h, cox) = regular_and_coxeter_elements(&table)?;
    table.coxeter_number = h;
    table.coxeter_ids = cox;
    Ok(table)
}

fn annotate_reflections(table: &mut GroupTable) -> Result<()> {
    let mut refls: Vec<(ReflClass, ElementId)> = Vec::new();
    for x in table.ids() {
        if is_reflection(table.element(x)) {
            let det = table.det(x);
            let class = ReflClass::from_det(det).ok_or_else(|| Error::UnlabelledReflection {
                det: det.to_string(),
            })?;
            refls.push((class, x));
        }
    }
    refls.sort();
    table.reflections = refls.iter().map(|&(_, x)| x).collect();
    table.refl_class = refls.iter().map(|&(c, _)| c).collect();
    table.sub_class = vec![None; refls.len()];

    let s_members = table.class_members(ReflClass::S);
    if !s_members.is_empty() {
        let mut parts = sub_conjugacy_classes(table, &s_members);
        // S1 holds the order-2 generator s, S2 holds g s g^-1, S3 holds g^2 s g^-2,
        // where g is the first generator outside S; ties fall back to canonical index.
        let anchor = table.generator_ids.iter().copied().find(|x| s_members.contains(x));
        let rot = table.generator_ids.iter().copied().find(|x| !s_members.contains(x));
        let conjugates: Vec<ElementId> = match (anchor, rot) {
            (Some(s), Some(g)) => (0..table.order(g))
                .map(|j| {
                    let gj = table.pow(g, j);
                    table.mul(table.mul(gj, s), table.inv(gj))
                })
                .collect(),
            _ => Vec::new(),
        };
        parts.sort_by_key(|p| {
            let j = conjugates.iter().position(|c| p.contains(c)).unwrap_or(usize::MAX);
            (j, p.iter().filter_map(|&x| table.reflection_index(x)).min())
        });
        for (label, part) in parts.iter().enumerate() {
            for &x in part {
                let i = table.reflection_index(x).expect("S members are reflections");
                table.sub_class[i] = Some(label as u8 + 1);
            }
        }
    }
    Ok(())
}

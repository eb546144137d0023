use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::cyclo::CycloNum;
use crate::error::Result;
use crate::matrix::Mat2;

use super::{g6, ElementId, GroupTable, ReflClass};

/// Sorted IDs of the subgroup generated by `gens`, found by closure in the table.
pub fn subgroup_closure(table: &GroupTable, gens: &[ElementId]) -> Vec<ElementId> {
    let mut seen = vec![false; table.len()];
    seen[0] = true;
    let mut queue = VecDeque::from([ElementId::IDENTITY]);
    while let Some(x) = queue.pop_front() {
        for &g in gens {
            let y = table.mul(x, g);
            if !seen[y.index()] {
                seen[y.index()] = true;
                queue.push_back(y);
            }
        }
    }
    table.ids().filter(|x| seen[x.index()]).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct G4Report {
    /// Order of the subgroup generated by `R1 u R2`.
    pub order: usize,
    /// The matrices `A' = A` and `B'` satisfy `A'^3 = I = B'^3` and `A' B' A' = B' A' B'`.
    pub relations_ok: bool,
    /// Order of the matrix group generated by `A'` and `B'`.
    pub presentation_order: usize,
    /// Whether `B'` is itself an element of the table.
    pub b_prime_in_group: bool,
    /// A reflection `t` of class `R1` inside the table with `t^3 = I`,
    /// `A t A = t A t` and `<A, t> = <R1 u R2>`.
    pub partner: Option<ElementId>,
}

impl G4Report {
    pub fn ok(&self) -> bool {
        self.order == 24 && self.presentation_order == 24 && self.relations_ok && self.partner.is_some()
    }
}

fn g4_relations(a: &Mat2, b: &Mat2) -> bool {
    a.pow(3).is_identity() && b.pow(3).is_identity() && a.mul(b).mul(a) == b.mul(a).mul(b)
}

/// Checks the subgroup generated by the order-3 reflections against the G4 presentation.
pub fn g4_check(table: &GroupTable) -> Result<G4Report> {
    let mut gens = table.class_members(ReflClass::R1);
    gens.extend(table.class_members(ReflClass::R2));
    let sub = subgroup_closure(table, &gens);
    let a = g6::generator_a();
    let bp = g6::g4_generator_b_prime();
    let presentation = crate::group::build_group_table_capped(&[a.clone(), bp.clone()], 1000)?;
    let partner = table.find(&a).and_then(|a_id| {
        table.class_members(ReflClass::R1).into_iter().find(|&t| {
            t != a_id
                && g4_relations(&a, table.element(t))
                && subgroup_closure(table, &[a_id, t]) == sub
        })
    });
    Ok(G4Report {
        order: sub.len(),
        relations_ok: g4_relations(&a, &bp),
        presentation_order: presentation.len(),
        b_prime_in_group: table.find(&bp).is_some(),
        partner,
    })
}

/// Which way a change-of-basis matrix is applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Orientation {
    /// `m x m^-1`
    Forward,
    /// `m^-1 x m`
    Backward,
}

impl Orientation {
    pub fn apply(self, m: &Mat2, x: &Mat2) -> Result<Mat2> {
        match self {
            Orientation::Forward => x.conjugate_by(m),
            Orientation::Backward => x.conjugate_by(&m.inv()?),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct G422Report {
    pub subgroup_order: usize,
    pub ok: bool,
    /// The orientation under which the image is G(4,2,2), if any.
    pub orientation: Option<Orientation>,
    pub image_size: usize,
}

/// Monomial with nonzero entries in `{+-1, +-i}` whose product is `+-1`.
pub fn is_g422_monomial(x: &Mat2) -> bool {
    let units = [
        CycloNum::one(),
        CycloNum::from_int(-1),
        CycloNum::i(),
        -CycloNum::i(),
    ];
    let (p, q) = if x.b.is_zero() && x.c.is_zero() {
        (&x.a, &x.d)
    } else if x.a.is_zero() && x.d.is_zero() {
        (&x.b, &x.c)
    } else {
        return false;
    };
    if !units.contains(p) || !units.contains(q) {
        return false;
    }
    let prod = p * q;
    prod.is_one() || prod == CycloNum::from_int(-1)
}

/// Tests whether conjugation by `m` carries `<S>` onto the sixteen monomial
/// matrices of G(4,2,2). Both orientations are tried, forward first.
pub fn g422_check(table: &GroupTable, m: &Mat2) -> Result<G422Report> {
    let sub = subgroup_closure(table, &table.class_members(ReflClass::S));
    let mut last_size = 0;
    for orientation in [Orientation::Forward, Orientation::Backward] {
        let mut image = HashSet::new();
        let mut all_monomial = true;
        for &x in &sub {
            let y = orientation.apply(m, table.element(x))?;
            all_monomial &= is_g422_monomial(&y);
            image.insert(y);
        }
        last_size = image.len();
        if all_monomial && image.len() == 16 && sub.len() == 16 {
            return Ok(G422Report {
                subgroup_order: sub.len(),
                ok: true,
                orientation: Some(orientation),
                image_size: image.len(),
            });
        }
    }
    Ok(G422Report {
        subgroup_order: sub.len(),
        ok: false,
        orientation: None,
        image_size: last_size,
    })
}

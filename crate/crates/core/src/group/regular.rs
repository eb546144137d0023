use crate::cyclo::CycloNum;
use crate::error::{Error, Result};
use crate::matrix::{collinear, Mat2};

use super::{ElementId, GroupTable};

/// Whether `g` has an eigenvector for `lambda` lying off every line in `hyperplanes`.
pub fn is_regular_for(g: &Mat2, lambda: &CycloNum, hyperplanes: &[[CycloNum; 2]]) -> bool {
    if *g == Mat2::scalar(lambda.clone()) {
        // every vector is an eigenvector; finitely many lines cannot cover the plane
        return true;
    }
    match g.eigenline(lambda) {
        Some(v) => hyperplanes.iter().all(|h| !collinear(&v, h)),
        None => false,
    }
}

/// Fixed lines of all reflections, in canonical reflection order.
pub fn reflecting_hyperplanes(table: &GroupTable) -> Vec<[CycloNum; 2]> {
    table
        .reflections()
        .iter()
        .map(|&r| {
            table
                .element(r)
                .eigenline(&CycloNum::one())
                .expect("a reflection fixes a line")
        })
        .collect()
}

/// Returns the Coxeter number `h` and the sorted IDs of all `h`-regular elements.
///
/// An element of order `d` is tested against the single eigenvalue `g^(12/d)`,
/// so every element order must divide 12.
pub fn regular_and_coxeter_elements(table: &GroupTable) -> Result<(u32, Vec<ElementId>)> {
    let hyperplanes = reflecting_hyperplanes(table);
    let mut best = 0u32;
    let mut regular: Vec<ElementId> = Vec::new();
    for x in table.ids() {
        let d = table.order(x);
        if 12 % d != 0 {
            return Err(Error::UnsupportedOrder { order: d });
        }
        let lambda = CycloNum::gamma_pow(12 / d as i64);
        if !is_regular_for(table.element(x), &lambda, &hyperplanes) {
            continue;
        }
        if d > best {
            best = d;
            regular.clear();
        }
        if d == best {
            regular.push(x);
        }
    }
    Ok((best, regular))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group_table, g6};

    #[test]
    fn four_coxeter_elements_including_ab() {
        let t = build_group_table(&g6::generators()).unwrap();
        let (h, ids) = regular_and_coxeter_elements(&t).unwrap();
        assert_eq!(h, 12);
        assert_eq!(ids.len(), 4);
        let c = t.find(&g6::coxeter_displayed()).unwrap();
        assert!(ids.contains(&c));
        assert_eq!(t.order(c), h);
        assert!(!ids.contains(&ElementId::IDENTITY));
    }
}

use super::{subgroup_closure, ElementId, GroupTable};

/// Orbits of the reflections under conjugation by the whole group, in order of
/// first appearance in the canonical reflection list.
pub fn conjugacy_classes(table: &GroupTable) -> Vec<Vec<ElementId>> {
    let all: Vec<ElementId> = table.ids().collect();
    orbits_under(table, table.reflections(), &all)
}

/// Conjugacy classes of `subset` computed inside the subgroup it generates.
pub fn sub_conjugacy_classes(table: &GroupTable, subset: &[ElementId]) -> Vec<Vec<ElementId>> {
    let sub = subgroup_closure(table, subset);
    orbits_under(table, subset, &sub)
}

fn orbits_under(table: &GroupTable, items: &[ElementId], by: &[ElementId]) -> Vec<Vec<ElementId>> {
    let mut seen = vec![false; items.len()];
    let mut parts = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        if seen[i] {
            continue;
        }
        let mut part = Vec::new();
        for (j, &y) in items.iter().enumerate() {
            if !seen[j] && by.iter().any(|&g| table.conj(x, g) == y) {
                seen[j] = true;
                part.push(y);
            }
        }
        parts.push(part);
    }
    parts
}

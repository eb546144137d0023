use crate::group::{ElementId, ReflClass};

use super::{ClassSignature, ReflectionSystem};

/// Number of reflection tuples with signature `sig` multiplying to `target`.
///
/// Dynamic programming over states (element, #R1 used, #R2 used, #S used),
/// extending every tuple on the right by each reflection of each class. It
/// shares no code with the enumerator and serves as its cross-check.
pub fn count_factorizations(sys: &ReflectionSystem, target: ElementId, sig: ClassSignature) -> u128 {
    let table = sys.table();
    let g = table.len();
    let (n, m, k) = (sig.n as usize, sig.m as usize, sig.k as usize);
    let idx = |e: usize, a: usize, b: usize, c: usize| ((e * (n + 1) + a) * (m + 1) + b) * (k + 1) + c;
    let mut ways = vec![0u128; g * (n + 1) * (m + 1) * (k + 1)];
    ways[idx(0, 0, 0, 0)] = 1;
    let by_class: Vec<(ReflClass, Vec<ElementId>)> = ReflClass::ALL
        .iter()
        .map(|&c| (c, sys.class_members(c).into_iter().map(|r| sys.element(r)).collect()))
        .collect();
    // process states in order of total length so every predecessor is final
    for total in 0..sig.len() {
        for a in 0..=n.min(total) {
            for b in 0..=m.min(total - a) {
                let c = total - a - b;
                if c > k {
                    continue;
                }
                for e in 0..g {
                    let w = ways[idx(e, a, b, c)];
                    if w == 0 {
                        continue;
                    }
                    for (class, members) in &by_class {
                        let (na, nb, nc) = match class {
                            ReflClass::R1 => (a + 1, b, c),
                            ReflClass::R2 => (a, b + 1, c),
                            ReflClass::S => (a, b, c + 1),
                        };
                        if na > n || nb > m || nc > k {
                            continue;
                        }
                        for &r in members {
                            let next = table.mul(ElementId(e as u32), r).index();
                            ways[idx(next, na, nb, nc)] += w;
                        }
                    }
                }
            }
        }
    }
    ways[idx(target.index(), n, m, k)]
}

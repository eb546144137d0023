//! Text syntax for factorizations.
//!
//! Entries are separated by commas. Each entry is either a canonical index
//! `r0`..`r13`, or a word in the generators joined by `*`, where a letter is
//! `A` or `B` with an optional integer exponent (`A^-1`, `B^2`). For example
//! `B,B*A*B` or `r0,r9`.

use crate::context::G6;
use crate::error::{Error, Result};
use crate::group::ElementId;
use crate::hurwitz::{Factorization, Refl};

fn bad(token: &str, position: usize, reason: impl Into<String>) -> Error {
    Error::BadToken {
        token: token.to_string(),
        position,
        reason: reason.into(),
    }
}

fn parse_letter(g6: &G6, letter: &str, token: &str, position: usize) -> Result<ElementId> {
    let letter = letter.trim();
    let (base, exp) = match letter.split_once('^') {
        Some((b, e)) => {
            let e = e.trim().trim_start_matches('(').trim_end_matches(')');
            let e: i64 = e
                .parse()
                .map_err(|_| bad(token, position, format!("bad exponent in `{letter}`")))?;
            (b.trim(), e)
        }
        None => (letter, 1),
    };
    let table = g6.table();
    let g = match base {
        "A" | "a" => g6.system().element(g6.a()),
        "B" | "b" => g6.system().element(g6.b()),
        "" => return Err(bad(token, position, "empty factor")),
        other => return Err(bad(token, position, format!("unknown letter `{other}`"))),
    };
    let order = table.order(g) as i64;
    Ok(table.pow(g, exp.rem_euclid(order) as u32))
}

/// Parses one entry to a group element. `position` is 1-based.
pub fn parse_entry(g6: &G6, token: &str, position: usize) -> Result<ElementId> {
    let t = token.trim();
    if t.is_empty() {
        return Err(bad(token, position, "empty entry"));
    }
    if let Some(idx) = t.strip_prefix('r') {
        let i: usize = idx
            .parse()
            .map_err(|_| bad(t, position, "expected a reflection index like r3"))?;
        if i >= g6.system().len() {
            return Err(bad(t, position, format!("reflection index must be below {}", g6.system().len())));
        }
        return Ok(g6.system().element(Refl(i as u8)));
    }
    let table = g6.table();
    let mut x = ElementId::IDENTITY;
    for letter in t.split('*') {
        x = table.mul(x, parse_letter(g6, letter, t, position)?);
    }
    Ok(x)
}

/// Parses entries without checking the product.
pub fn parse_refls(g6: &G6, text: &str) -> Result<Vec<Refl>> {
    if text.trim().is_empty() {
        return Err(Error::parse(text, "empty factorization"));
    }
    let body = text.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
    body.split(',')
        .enumerate()
        .map(|(i, token)| {
            let x = parse_entry(g6, token, i + 1)?;
            g6.system().refl_of(x).ok_or_else(|| Error::NotAReflection {
                token: token.trim().to_string(),
                position: i + 1,
            })
        })
        .collect()
}

/// Parses a factorization of the Coxeter element.
pub fn parse_factorization(g6: &G6, text: &str) -> Result<Factorization> {
    let refls = parse_refls(g6, text)?;
    Factorization::new(g6.system(), refls, g6.coxeter())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn letters_and_indices() {
        let g = G6::build().unwrap();
        let f = parse_factorization(&g, "A,B").unwrap();
        assert_eq!(f.refls, vec![g.a(), g.b()]);
        let f = parse_factorization(&g, " B , B*A*B ").unwrap();
        assert_eq!(f.refls[0], g.b());
        let again = parse_factorization(&g, &f.to_string()).unwrap();
        assert_eq!(again, f);
        assert_eq!(parse_refls(&g, "A^-1").unwrap(), vec![g.a_inv()]);
        assert_eq!(parse_refls(&g, "A^2").unwrap(), vec![g.a_inv()]);
    }

    #[test]
    fn errors_name_the_token() {
        let g = G6::build().unwrap();
        match parse_factorization(&g, "A,A") {
            Err(Error::ProductMismatch { expected, .. }) => assert_eq!(expected, g.coxeter().0),
            other => panic!("{other:?}"),
        }
        match parse_factorization(&g, "A,A*B") {
            Err(Error::NotAReflection { token, position }) => {
                assert_eq!(token, "A*B");
                assert_eq!(position, 2);
            }
            other => panic!("{other:?}"),
        }
        match parse_factorization(&g, "A,X") {
            Err(Error::BadToken { position, .. }) => assert_eq!(position, 2),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_factorization(&g, "r14,A"), Err(Error::BadToken { .. })));
        assert!(matches!(parse_factorization(&g, "A,,B"), Err(Error::BadToken { position: 2, .. })));
        assert!(parse_factorization(&g, "").is_err());
        assert!(matches!(parse_factorization(&g, "A^x"), Err(Error::BadToken { .. })));
    }
}

//! Named elements, referenced as `@name` on the command line.

use crate::error::{Error, Result};
use crate::group::{wrapper, Element, WrapCode};
use crate::stabilizer::basic_table;

/// The first 5-leaf pair, in enumeration order, whose link is a trefoil.
pub const TREFOIL: &str = "(((.,.),(.,.)),.);(.,((.,.),(.,.)))";

/// The first knot with determinant 5 in enumeration order (7 leaves; no
/// pair with fewer leaves has determinant 5).
pub const DET5: &str = "((((.,((.,.),.)),.),.),.);((.,.),((.,(.,.)),(.,.)))";

/// Every library name, in a stable order.
pub fn names() -> Vec<String> {
    let mut v: Vec<String> = (0..=5).map(|n| format!("x{n}")).collect();
    v.extend(basic_table().iter().map(|r| format!("g{}", r.u)));
    v.extend(["trefoil", "det5"].map(String::from));
    v.extend(WrapCode::ALL.iter().map(|c| format!("w{}", c.word())));
    v
}

/// Looks up a name, with or without its leading `@`.
pub fn lookup(name: &str) -> Result<Element> {
    let name = name.strip_prefix('@').unwrap_or(name);
    let unknown = || Error::UnknownName(name.to_string());
    match name {
        "trefoil" => return Ok(Element::from_pair(TREFOIL.parse()?)),
        "det5" => return Ok(Element::from_pair(DET5.parse()?)),
        _ => {}
    }
    if let Some(n) = name.strip_prefix('x') {
        return match n.parse::<usize>() {
            Ok(n) if n <= 5 => Ok(Element::generator(n)),
            _ => Err(unknown()),
        };
    }
    if let Some(u) = name.strip_prefix('g') {
        return basic_table().iter().find(|r| r.u.to_string() == u).map(|r| r.element.clone()).ok_or_else(unknown);
    }
    if let Some(w) = name.strip_prefix('w') {
        let code: WrapCode = w.parse().map_err(|_| unknown())?;
        return Ok(wrapper(code).element());
    }
    Err(unknown())
}

/// `@name`, a tree pair or a generator word.
pub fn parse_element(s: &str) -> Result<Element> {
    let s = s.trim();
    if s.starts_with('@') {
        lookup(s)
    } else {
        s.parse()
    }
}

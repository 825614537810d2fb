//! Text forms of elements and relation sets, checked against a system.

use crate::coxeter::{CoxeterSystem, GroupElement};
use crate::error::{Error, Result};
use crate::words::{RelationSet, Word};

/// An element either in one-line form (`3 1 2`, images of `1..=n`; signed for
/// type D, e.g. `-2 -1 3 4`) or as a word whose letters carry an `s`
/// prefix (`s1 s2 s1`).
pub fn parse_element(system: &CoxeterSystem, text: &str) -> Result<GroupElement> {
    let tokens: Vec<&str> = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .collect();
    if tokens.iter().any(|t| t.starts_with(['s', 'S'])) {
        let word: Word = text.parse()?;
        return system.evaluate(&word);
    }
    let symbols = system.symbols();
    let n = symbols.positive_count();
    if tokens.len() != n {
        return Err(Error::Parse(format!(
            "one-line form of a {} element needs {n} values, got {}",
            system.ctype(),
            tokens.len()
        )));
    }
    let mut images = vec![usize::MAX; symbols.len()];
    for (k, tok) in tokens.iter().enumerate() {
        let v: i32 = tok
            .parse()
            .map_err(|_| Error::Parse(format!("bad value `{tok}` in one-line form")))?;
        let src = k as i32 + 1;
        let dst = symbols.index(v).ok_or_else(|| {
            Error::Parse(format!("value {v} out of range for {}", system.ctype()))
        })?;
        images[symbols.index(src).unwrap()] = dst;
        if let (Some(neg_src), Some(neg_dst)) = (symbols.index(-src), symbols.index(-v)) {
            images[neg_src] = neg_dst;
        }
    }
    let e = GroupElement::from_images(&images)
        .ok_or_else(|| Error::Parse(format!("`{text}` is not a permutation")))?;
    if symbols.len() > n && tokens.iter().filter(|t| t.starts_with('-')).count() % 2 == 1 {
        return Err(Error::NotInGroup);
    }
    Ok(e)
}

/// `elnitsky` (the default), `all-commuting`, `none`, or an explicit pair list
/// such as `1-3,2-4` (optionally `custom:` prefixed or braced).
pub fn parse_relations(system: &CoxeterSystem, text: &str) -> Result<RelationSet> {
    let t = text.trim();
    match t {
        "" | "elnitsky" | "default" => return Ok(RelationSet::elnitsky(system)),
        "all-commuting" | "commuting" | "all" => return Ok(RelationSet::all_commuting(system)),
        "none" | "{}" => return Ok(RelationSet::none()),
        _ => {}
    }
    let body = t.strip_prefix("custom:").unwrap_or(t);
    let body = body.trim().trim_start_matches('{').trim_end_matches('}');
    let mut pairs = Vec::new();
    for item in body.split([',', ' ']).filter(|s| !s.is_empty()) {
        let (a, b) = item
            .split_once('-')
            .ok_or_else(|| Error::Parse(format!("relation `{item}` is not of the form i-j")))?;
        let num = |s: &str| -> Result<usize> {
            let s = s.trim().trim_start_matches(['s', 't']);
            match s.parse::<usize>() {
                Ok(v) if v >= 1 => Ok(v - 1),
                _ => Err(Error::Parse(format!(
                    "bad generator `{s}` in relation `{item}`"
                ))),
            }
        };
        pairs.push((num(a)?, num(b)?));
    }
    if pairs.is_empty() {
        return Err(Error::Parse(format!("unknown relation set `{t}`")));
    }
    RelationSet::custom(system, pairs)
}

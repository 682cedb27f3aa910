//! Text grammar for singular braid words.
//!
//! ```text
//! link   := word ( "|" "o" "=" nat* )?
//! word   := nat ":" letter*
//! letter := ("s" | "t") nat ("^-1")?
//! ```
//!
//! Tokens are whitespace separated. `t<i>^-1` is rejected since singular
//! crossings carry no sign.

use super::{DiagramError, Letter, OrderedSingularLink, SingularBraidWord};

fn syntax(pos: usize, msg: impl Into<String>) -> DiagramError {
    DiagramError::Syntax {
        pos,
        msg: msg.into(),
    }
}

/// Whitespace-separated tokens with their byte offsets into the input.
fn tokens(text: &str, offset: usize) -> impl Iterator<Item = (usize, &str)> {
    text.split_whitespace().map(move |tok| {
        (
            offset + (tok.as_ptr() as usize - text.as_ptr() as usize),
            tok,
        )
    })
}

fn parse_nat(tok: &str, pos: usize) -> Result<usize, DiagramError> {
    if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
        return Err(syntax(
            pos,
            format!("expected a natural number, found `{tok}`"),
        ));
    }
    tok.parse()
        .map_err(|_| syntax(pos, format!("number `{tok}` is too large")))
}

fn parse_letter(tok: &str, pos: usize) -> Result<Letter, DiagramError> {
    let mut chars = tok.chars();
    let kind = chars.next().ok_or_else(|| syntax(pos, "empty letter"))?;
    if kind != 's' && kind != 't' {
        return Err(syntax(pos, format!("expected `s` or `t`, found `{kind}`")));
    }
    let rest = &tok[1..];
    let (digits, inverse) = match rest.find('^') {
        Some(k) => {
            if &rest[k..] != "^-1" {
                return Err(syntax(
                    pos + 1 + k,
                    format!("expected `^-1`, found `{}`", &rest[k..]),
                ));
            }
            (&rest[..k], true)
        }
        None => (rest, false),
    };
    let index = parse_nat(digits, pos + 1)?;
    match (kind, inverse) {
        ('s', false) => Ok(Letter::Pos(index)),
        ('s', true) => Ok(Letter::Neg(index)),
        ('t', false) => Ok(Letter::Sing(index)),
        _ => Err(syntax(pos, "singular crossings have no inverse")),
    }
}

fn parse_word_at(text: &str, offset: usize) -> Result<SingularBraidWord, DiagramError> {
    let colon = text
        .find(':')
        .ok_or_else(|| syntax(offset + text.len(), "expected `:` after the strand count"))?;
    let head = &text[..colon];
    let (hpos, htok) = {
        let mut it = tokens(head, offset);
        let first = it
            .next()
            .ok_or_else(|| syntax(offset, "missing strand count"))?;
        if let Some((pos, tok)) = it.next() {
            return Err(syntax(pos, format!("unexpected `{tok}` before `:`")));
        }
        first
    };
    let strands = parse_nat(htok, hpos)?;
    let letters = tokens(&text[colon + 1..], offset + colon + 1)
        .map(|(pos, tok)| parse_letter(tok, pos))
        .collect::<Result<Vec<_>, _>>()?;
    SingularBraidWord::new(strands, letters)
}

/// Parses a word without an ordering suffix.
pub fn parse_word(text: &str) -> Result<SingularBraidWord, DiagramError> {
    if let Some(bar) = text.find('|') {
        return Err(syntax(bar, "ordering suffix not allowed here"));
    }
    parse_word_at(text, 0)
}

/// Parses a word with an optional `| o = k1 ... kd` ordering suffix. Without
/// the suffix singular points are labeled in reading order.
pub fn parse_link(text: &str) -> Result<OrderedSingularLink, DiagramError> {
    let Some(bar) = text.find('|') else {
        return Ok(OrderedSingularLink::from_word(parse_word_at(text, 0)?));
    };
    let word = parse_word_at(&text[..bar], 0)?;
    let mut pos = bar + 1;
    for expected in ['o', '='] {
        let rest = &text[pos..];
        let skipped = rest.len() - rest.trim_start().len();
        pos += skipped;
        match text[pos..].chars().next() {
            Some(c) if c == expected => pos += 1,
            Some(c) => return Err(syntax(pos, format!("expected `{expected}`, found `{c}`"))),
            None => return Err(syntax(pos, format!("expected `{expected}`"))),
        }
    }
    let ordering = tokens(&text[pos..], pos)
        .map(|(pos, tok)| parse_nat(tok, pos))
        .collect::<Result<Vec<_>, _>>()?;
    OrderedSingularLink::new(word, ordering)
}

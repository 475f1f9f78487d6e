use crate::error::{CliError, Location, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    /// Letters, digits and underscores: names, labels, keywords, numbers.
    Word(String),
    /// A double-quoted string; holds the raw contents.
    Str(String),
    Sym(char),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    pub at: Location,
}

const SYMBOLS: &str = "{}(),~=;+*^";

pub fn is_word_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

/// Splits `text` into tokens, dropping whitespace and `#` comments.
/// `origin` is the location of the first character, so that the contents
/// of a quoted string can be lexed again with correct positions.
pub fn tokenize(text: &str, origin: Location) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut line = origin.line;
    let mut col = origin.col;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let at = Location { line, col };
        if c == '\n' {
            chars.next();
            line += 1;
            col = 1;
        } else if c.is_whitespace() {
            chars.next();
            col += 1;
        } else if c == '#' {
            while chars.peek().is_some_and(|&c| c != '\n') {
                chars.next();
            }
        } else if is_word_char(c) {
            let mut w = String::new();
            while let Some(&c) = chars.peek().filter(|&&c| is_word_char(c)) {
                w.push(c);
                chars.next();
                col += 1;
            }
            out.push(Token {
                tok: Tok::Word(w),
                at,
            });
        } else if c == '"' {
            chars.next();
            col += 1;
            let mut s = String::new();
            loop {
                match chars.next() {
                    Some('"') => {
                        col += 1;
                        break;
                    }
                    Some('\n') | None => return Err(CliError::syntax(at, "unterminated string")),
                    Some(c) => {
                        s.push(c);
                        col += 1;
                    }
                }
            }
            out.push(Token {
                tok: Tok::Str(s),
                at,
            });
        } else if SYMBOLS.contains(c) {
            chars.next();
            col += 1;
            out.push(Token {
                tok: Tok::Sym(c),
                at,
            });
        } else {
            return Err(CliError::syntax(at, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

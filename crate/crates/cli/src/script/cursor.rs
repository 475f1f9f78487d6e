use super::lexer::{Tok, Token};
use crate::error::{CliError, Location, Result};

/// A token stream with one-token lookahead.
pub struct Cursor {
    toks: Vec<Token>,
    pos: usize,
    /// Reported when the input runs out.
    end: Location,
}

impl Cursor {
    pub fn new(toks: Vec<Token>, end: Location) -> Self {
        Self { toks, pos: 0, end }
    }

    pub fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    pub fn at(&self) -> Location {
        self.toks.get(self.pos).map_or(self.end, |t| t.at)
    }

    pub fn is_done(&self) -> bool {
        self.pos >= self.toks.len()
    }

    pub fn next(&mut self) -> Option<Token> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    pub fn peek_word(&self) -> Option<&str> {
        match self.peek() {
            Some(Tok::Word(w)) => Some(w),
            _ => None,
        }
    }

    pub fn peek_sym(&self, c: char) -> bool {
        self.peek() == Some(&Tok::Sym(c))
    }

    pub fn eat_sym(&mut self, c: char) -> bool {
        let hit = self.peek_sym(c);
        if hit {
            self.pos += 1;
        }
        hit
    }

    pub fn eat_word(&mut self, w: &str) -> bool {
        let hit = self.peek_word() == Some(w);
        if hit {
            self.pos += 1;
        }
        hit
    }

    pub fn expect_sym(&mut self, c: char) -> Result<()> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("`{c}`")))
        }
    }

    pub fn expect_keyword(&mut self, w: &str) -> Result<()> {
        if self.eat_word(w) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("`{w}`")))
        }
    }

    /// Any word, with its location.
    pub fn word(&mut self, what: &str) -> Result<(String, Location)> {
        let at = self.at();
        match self.peek() {
            Some(Tok::Word(w)) => {
                let w = w.clone();
                self.pos += 1;
                Ok((w, at))
            }
            _ => Err(self.unexpected(what)),
        }
    }

    pub fn number(&mut self, what: &str) -> Result<(u64, Location)> {
        let (w, at) = self.word(what)?;
        w.parse::<u64>()
            .map(|n| (n, at))
            .map_err(|_| CliError::syntax(at, format!("expected {what}, found `{w}`")))
    }

    pub fn string(&mut self, what: &str) -> Result<(String, Location)> {
        let at = self.at();
        match self.peek() {
            Some(Tok::Str(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok((s, at))
            }
            _ => Err(self.unexpected(what)),
        }
    }

    pub fn unexpected(&self, what: &str) -> CliError {
        let found = match self.peek() {
            Some(Tok::Word(w)) => format!("`{w}`"),
            Some(Tok::Str(s)) => format!("\"{s}\""),
            Some(Tok::Sym(c)) => format!("`{c}`"),
            None => "end of input".to_string(),
        };
        CliError::syntax(self.at(), format!("expected {what}, found {found}"))
    }
}

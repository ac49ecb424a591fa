use std::io::IsTerminal;

use serde_json::Value;

/// ANSI styling for verdict words, off when stdout is not a terminal or
/// `UTA_COLOR=0`.
pub struct Style {
    enabled: bool,
}

impl Style {
    pub fn detect() -> Self {
        let disabled = std::env::var("UTA_COLOR").is_ok_and(|v| v == "0");
        Style { enabled: !disabled && std::io::stdout().is_terminal() }
    }

    fn paint(&self, code: &str, text: &str) -> String {
        if self.enabled {
            format!("\x1b[{code}m{text}\x1b[0m")
        } else {
            text.to_string()
        }
    }

    pub fn good(&self, text: &str) -> String {
        self.paint("32", text)
    }

    pub fn bad(&self, text: &str) -> String {
        self.paint("31", text)
    }

    pub fn verdict(&self, ok: bool, text: &str) -> String {
        if ok {
            self.good(text)
        } else {
            self.bad(text)
        }
    }
}

pub struct Out {
    pub json: bool,
    pub style: Style,
}

impl Out {
    /// Prints `value` in JSON mode and `text` otherwise.
    pub fn emit(&self, value: Value, text: impl FnOnce(&Style) -> String) {
        if self.json {
            println!("{value}");
        } else {
            let s = text(&self.style);
            print!("{s}");
            if !s.ends_with('\n') {
                println!();
            }
        }
    }
}

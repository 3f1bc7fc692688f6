//! TeX accent normalization.
//!
//! Bibliographic sources encode non-ASCII characters as TeX macros, in
//! several spellings: `Must\u{a}\c{t}a` and `Must\u a\c ta` denote the
//! same name. The normalizer maps every recognized spelling to the same
//! UTF-8 text; unknown macros pass through verbatim and are tallied.

use std::collections::HashMap;
use std::path::Path;

use unicode_normalization::UnicodeNormalization;

#[derive(Debug, Clone)]
enum Rule {
    /// Combining character appended to the macro argument's first letter.
    Accent(char),
    /// Whole-macro substitution.
    Direct(String),
}

/// Ordered macro table; editable as a data file (see `data/tex_rules.tsv`).
#[derive(Debug, Clone)]
pub struct TexNormTable {
    rules: HashMap<String, Rule>,
}

const DEFAULT_RULES: &str = include_str!("../data/tex_rules.tsv");

impl Default for TexNormTable {
    fn default() -> Self {
        TexNormTable::from_tsv(DEFAULT_RULES).expect("built-in rule table is valid")
    }
}

impl TexNormTable {
    /// Parse a rule table. Lines are `kind TAB macro TAB replacement`;
    /// `#` starts a comment. Accent replacements use `U+xxxx` notation.
    pub fn from_tsv(text: &str) -> Result<TexNormTable, String> {
        let mut rules = HashMap::new();
        for (ln, line) in text.lines().enumerate() {
            let line = line.trim_end();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() != 3 {
                return Err(format!("line {}: expected 3 tab-separated fields", ln + 1));
            }
            let rule = match fields[0] {
                "accent" => {
                    let hex = fields[2]
                        .strip_prefix("U+")
                        .ok_or_else(|| format!("line {}: accent needs U+xxxx", ln + 1))?;
                    let cp = u32::from_str_radix(hex, 16)
                        .map_err(|e| format!("line {}: {}", ln + 1, e))?;
                    Rule::Accent(char::from_u32(cp).ok_or_else(|| {
                        format!("line {}: invalid code point U+{}", ln + 1, hex)
                    })?)
                }
                "direct" => Rule::Direct(fields[2].to_string()),
                other => return Err(format!("line {}: unknown kind {:?}", ln + 1, other)),
            };
            rules.insert(fields[1].to_string(), rule);
        }
        Ok(TexNormTable { rules })
    }

    pub fn from_file(path: &Path) -> Result<TexNormTable, String> {
        let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
        TexNormTable::from_tsv(&text)
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }
}

/// Compose a base letter with a combining character, preferring the NFC
/// precomposed form. Dotless ı/ȷ revert to i/j under an accent, as in TeX.
fn compose(base: char, comb: char, out: &mut String) {
    let base = match base {
        'ı' => 'i',
        'ȷ' => 'j',
        b => b,
    };
    let composed: String = [base, comb].iter().collect::<String>().nfc().collect();
    out.push_str(&composed);
}

/// Normalize all recognized TeX macros in `s`. Returns the normalized
/// text and the list of unknown macros encountered (verbatim).
pub fn normalize_tex_counting(s: &str, table: &TexNormTable) -> (String, Vec<String>) {
    let chars: Vec<char> = s.chars().collect();
    let mut out = String::with_capacity(s.len());
    let mut unknown = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c != '\\' {
            out.push(c);
            i += 1;
            continue;
        }
        if i + 1 >= chars.len() {
            out.push('\\');
            break;
        }
        // control word (alphabetic name) or control symbol (one char)
        let (name, mut j, is_word) = if chars[i + 1].is_ascii_alphabetic() {
            let mut j = i + 1;
            while j < chars.len() && chars[j].is_ascii_alphabetic() {
                j += 1;
            }
            (chars[i + 1..j].iter().collect::<String>(), j, true)
        } else {
            (chars[i + 1].to_string(), i + 2, false)
        };
        match self::lookup(table, &name) {
            Some(Rule::Accent(comb)) => {
                // control words eat following spaces before the argument
                let mut k = j;
                if is_word {
                    while k < chars.len() && chars[k] == ' ' {
                        k += 1;
                    }
                }
                if k < chars.len() && chars[k] == '{' {
                    let close = chars[k..].iter().position(|&c| c == '}');
                    match close {
                        Some(off) => {
                            let arg = &chars[k + 1..k + off];
                            if !emit_accented(arg, comb, table, &mut out) {
                                out.extend(chars[i..k + off + 1].iter());
                            }
                            i = k + off + 1;
                        }
                        None => {
                            // unbalanced brace: keep the macro verbatim
                            out.extend(chars[i..].iter());
                            i = chars.len();
                        }
                    }
                } else if k < chars.len() {
                    if chars[k] == '\\' {
                        // accent over another macro, e.g. a dotless \i
                        let mut m = k + 1;
                        if m < chars.len() && chars[m].is_ascii_alphabetic() {
                            while m < chars.len() && chars[m].is_ascii_alphabetic() {
                                m += 1;
                            }
                        } else if m < chars.len() {
                            m += 1;
                        }
                        if !emit_accented(&chars[k..m], comb, table, &mut out) {
                            out.extend(chars[i..m].iter());
                        }
                        i = m;
                    } else {
                        compose(chars[k], comb, &mut out);
                        i = k + 1;
                    }
                } else {
                    out.push(comb);
                    i = k;
                }
            }
            Some(Rule::Direct(repl)) => {
                out.push_str(&repl);
                if is_word {
                    // consume an empty brace group or the space that
                    // terminated the control word
                    if j + 1 < chars.len() && chars[j] == '{' && chars[j + 1] == '}' {
                        j += 2;
                    } else if j < chars.len() && chars[j] == ' ' {
                        j += 1;
                    }
                }
                i = j;
            }
            None => {
                unknown.push(format!("\\{}", name));
                out.extend(chars[i..j].iter());
                i = j;
            }
        }
    }
    (out, unknown)
}

fn lookup(table: &TexNormTable, name: &str) -> Option<Rule> {
    table.rules.get(name).cloned()
}

/// Write an accent argument, composing the combining mark onto its first
/// letter. The argument may itself be a direct macro such as `\i`.
/// Returns false when the argument starts with a macro that has no direct
/// replacement; the caller then keeps the whole construct verbatim so that
/// a second normalization pass makes the same decision.
fn emit_accented(arg: &[char], comb: char, table: &TexNormTable, out: &mut String) -> bool {
    match arg.split_first() {
        None => {
            out.push(comb);
            true
        }
        Some((&'\\', rest)) => {
            let inner: String = if rest.first().is_some_and(|c| c.is_ascii_alphabetic()) {
                rest.iter().take_while(|c| c.is_ascii_alphabetic()).collect()
            } else {
                rest.first().map(|c| c.to_string()).unwrap_or_default()
            };
            let tail = &rest[inner.chars().count()..];
            match lookup(table, &inner) {
                Some(Rule::Direct(repl)) => {
                    let mut repl_chars = repl.chars();
                    match repl_chars.next() {
                        Some(first) => compose(first, comb, out),
                        None => out.push(comb),
                    }
                    out.extend(repl_chars);
                    out.extend(tail.iter());
                    true
                }
                _ => false,
            }
        }
        Some((&first, rest)) => {
            compose(first, comb, out);
            out.extend(rest.iter());
            true
        }
    }
}

/// Normalize all recognized TeX macros in `s`, ignoring the unknown-macro
/// tally.
pub fn normalize_tex(s: &str, table: &TexNormTable) -> String {
    normalize_tex_counting(s, table).0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn braced_spelling() {
        let t = TexNormTable::default();
        assert_eq!(normalize_tex("Must\\u{a}\\c{t}a", &t), "Mustăţa");
    }

    #[test]
    fn unbraced_spelling() {
        let t = TexNormTable::default();
        assert_eq!(normalize_tex("Must\\u a\\c ta", &t), "Mustăţa");
    }

    #[test]
    fn both_spellings_agree() {
        let t = TexNormTable::default();
        assert_eq!(
            normalize_tex("Must\\u{a}\\c{t}a, Costic\\u{a}", &t),
            normalize_tex("Must\\u a\\c ta, Costic\\u a", &t)
        );
    }

    #[test]
    fn control_symbols() {
        let t = TexNormTable::default();
        assert_eq!(normalize_tex("Us\\'o-Dom\\`enech", &t), "Usó-Domènech");
        assert_eq!(normalize_tex("Pe\\v{c}ari\\'c", &t), "Pečarić");
        assert_eq!(normalize_tex("Erd\\H{o}s", &t), "Erdős");
    }

    #[test]
    fn direct_macros() {
        let t = TexNormTable::default();
        assert_eq!(normalize_tex("Gau\\ss", &t), "Gauß");
        assert_eq!(normalize_tex("\\O sterg\\aa rd", &t), "Østergård");
        assert_eq!(normalize_tex("\\l{}uk", &t), "łuk");
    }

    #[test]
    fn plain_ascii_is_fixed_point() {
        let t = TexNormTable::default();
        assert_eq!(normalize_tex("plain ascii", &t), "plain ascii");
    }

    #[test]
    fn unknown_macros_pass_through_and_are_counted() {
        let t = TexNormTable::default();
        let (out, unknown) = normalize_tex_counting("$L(M_T)$ \\frac12", &t);
        assert_eq!(out, "$L(M_T)$ \\frac12");
        assert_eq!(unknown, vec!["\\frac".to_string()]);
    }

    #[test]
    fn idempotent() {
        let t = TexNormTable::default();
        for s in [
            "Must\\u{a}\\c{t}a",
            "Us\\'o-Dom\\`enech, J.L.",
            "\\unknown{x} $a^2$",
            "Pe\\v{c}ari\\'c, J. E.",
        ] {
            let once = normalize_tex(s, &t);
            assert_eq!(normalize_tex(&once, &t), once, "not idempotent on {s:?}");
        }
    }

    #[test]
    fn accented_dotless_i() {
        let t = TexNormTable::default();
        assert_eq!(normalize_tex("Miha\\u{\\i}lovna", &t), "Mihaĭlovna");
    }
}

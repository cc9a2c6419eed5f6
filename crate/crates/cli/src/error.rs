use hkr_core::HkrError;

pub const GRAMMAR: &str = "\
group expressions:
  expr    := factor ( '*' factor )*
  factor  := 'Sym' '(' int ')' | 'Cyc' '(' int ')' | 'Dih' '(' int ')'
           | 'Q8' | 'Perm' '(' int ';' perm ( ',' perm )* ')' | '(' expr ')'
  perm    := cycle+
  cycle   := '(' int* ')'
examples: Sym(4), Cyc(2)*Cyc(4), Dih(5), Perm(4; (0 1)(2 3), (0 2))";

#[derive(Debug)]
pub enum CliError {
    /// Bad invocation; exit code 2.
    Usage(String),
    /// A computation failed or hit a cap; exit code 1.
    Compute(HkrError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Compute(_) => 1,
        }
    }

    pub fn message(&self) -> String {
        match self {
            CliError::Usage(m) => format!("usage error: {m}"),
            CliError::Compute(e) => format!("error: {e}"),
        }
    }
}

impl From<HkrError> for CliError {
    fn from(e: HkrError) -> Self {
        match e {
            HkrError::Parse { .. } | HkrError::UnsupportedFamily(_) | HkrError::MalformedPermutation(_) => {
                CliError::Usage(format!("{e}\n{GRAMMAR}"))
            }
            HkrError::InvalidArgument(_) | HkrError::InvalidGSet(_) => CliError::Usage(e.to_string()),
            other => CliError::Compute(other),
        }
    }
}

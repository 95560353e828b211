from coordination_semantics.syntax import parser

from coordination_semantics.service import workbench

__title__ = 'coordination_semantics'
__version__ = '0.3.0'
__license__ = 'LGPL3'
__author__ = 'The coordination_semantics developers'
__copyright__ = 'The coordination_semantics developers'
__contact__ = ''
__url__ = ''
__description__ = 'a workbench checking lattice laws, vector-option semantics, implicatures and ' \
                  'probabilistic relevance for coordinated sentence schemas'

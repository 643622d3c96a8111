# version tracking
# ----------------
# number   | MM/DD/YYYY  | Description (Author: comments)
# ------   | ----------  | ------------------------------
# 0.1      | 06/02/2026  | task framework, Fock-space core, closed-form evolutions,
#          |             | partial-transpose negativity.
#--------------------------------------------------------
# 0.2      | 09/14/2026  | Gaussian covariance scenarios, master-equation oracle,
#          |             | coupler tasks and the waveguidepy command line.
#
#

__version__ = '0.2.dev0'

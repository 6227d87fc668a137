"""Regenerate the bundled FCIDUMP fixtures (requires pyscf).

Each file carries its reference FCI energy in a leading comment line and the
lowest energy over every particle-number sector, which is what an
exact diagonalization of the full Fock-space matrix returns.
"""
import io
import sys

import numpy as np
from pyscf import ao2mo, fci, gto, scf
from pyscf.tools import fcidump

SYSTEMS = {
    "h2_sto3g": ("H 0 0 0; H 0 0 0.7414", "sto-3g"),
    "h2_631g": ("H 0 0 0; H 0 0 0.7414", "6-31g"),
    "lih_sto3g": ("Li 0 0 0; H 0 0 1.5949", "sto-3g"),
}


def sector_minimum(h1, eri, norb):
    best = None
    for na in range(norb + 1):
        for nb in range(norb + 1):
            if na + nb == 0:
                e = 0.0
            else:
                e, _ = fci.direct_spin1.kernel(h1, eri, norb, (na, nb), tol=1e-12)
            best = e if best is None else min(best, e)
    return best


def main(outdir):
    for name, (atom, basis) in SYSTEMS.items():
        mol = gto.M(atom=atom, basis=basis, unit="Angstrom", verbose=0)
        mf = scf.RHF(mol).run(conv_tol=1e-12)
        norb = mf.mo_coeff.shape[1]
        h1 = mf.mo_coeff.T @ mf.get_hcore() @ mf.mo_coeff
        eri = ao2mo.restore(1, ao2mo.kernel(mol, mf.mo_coeff), norb)
        e_fci, _ = fci.FCI(mf).kernel(tol=1e-12)
        e_min = sector_minimum(h1, eri, norb) + mol.energy_nuc()
        path = f"{outdir}/{name}.fcidump"
        fcidump.from_integrals(path, h1, eri, norb, mol.nelectron,
                               nuc=mol.energy_nuc(), ms=0, tol=1e-14,
                               float_format=" %.16e")
        body = open(path).read()
        with open(path, "w") as f:
            f.write(f"! {name}: {atom} / {basis}\n")
            f.write(f"! fci_energy = {e_fci:.12f}\n")
            f.write(f"! fock_space_min_energy = {e_min:.12f}\n")
            f.write(body)
        print(name, norb, e_fci, e_min)


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data")

"""Pure-Python product kernel, bit-for-bit twin of ``_kernel.pyx``.

For rows ``alpha`` and ``beta`` the product ``sigma = alpha * beta``
(``sigma[x] = alpha[beta[x]]``) is summarized by one int64 key::

    key = (type_code * (n + 1) + common_fixed) * m_sep**m_sep + sep_code

``type_code`` lists the cycle lengths of ``sigma`` in decreasing order as
base-``(n+1)`` digits, ``common_fixed`` counts points fixed by both factors
and ``sep_code`` is the restricted-growth string of the partition of
``{0, ..., m_sep-1}`` induced by the cycles of ``sigma``, little-endian in base
``m_sep``.
"""

import numpy as np


def pair_keys(alphas, betas, m_sep):
    alphas = np.asarray(alphas)
    betas = np.asarray(betas)
    n = alphas.shape[1]
    if betas.shape[1] != n:
        raise ValueError("alpha and beta rows must have the same length")
    if n > 11 or m_sep > 6 or m_sep > n or m_sep < 0:
        raise ValueError("kernel supports n <= 11 and 0 <= m_sep <= min(n, 6)")
    sep_base = m_sep ** m_sep
    alist = alphas.tolist()
    blist = betas.tolist()
    out = []
    rn = range(n)
    for alpha in alist:
        afix = [alpha[x] == x for x in rn]
        for beta in blist:
            prod = [alpha[y] for y in beta]
            fixed = 0
            for x in rn:
                if beta[x] == x and afix[x]:
                    fixed += 1
            label = [-1] * n
            lengths = []
            ncyc = 0
            for x in rn:
                if label[x] < 0:
                    length = 0
                    y = x
                    while label[y] < 0:
                        label[y] = ncyc
                        y = prod[y]
                        length += 1
                    lengths.append(length)
                    ncyc += 1
            lengths.sort(reverse=True)
            code = 0
            for length in lengths:
                code = code * (n + 1) + length
            rgs = {}
            sep = 0
            mult = 1
            for x in range(m_sep):
                c = label[x]
                if c not in rgs:
                    rgs[c] = len(rgs)
                sep += rgs[c] * mult
                mult *= m_sep
            out.append((code * (n + 1) + fixed) * sep_base + sep)
    return np.array(out, dtype=np.int64)

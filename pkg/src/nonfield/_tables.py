"""Embedded reference tables, value columns kept as printed decimal text.

Row tuples: (system, label, n, l, two_j, series, value, unit, source, flags)
with '' for fields that do not apply.  Calculated and observed columns of
one printed row become two entries sharing label/system.
"""

# --- He II transition energies (eV); series tags the (N, j-branch) class.
_HE_CALC = [
    # label, l, two_j, N, calc, obs, flags
    ("2s1/2", 0, 1, 1, "40.8130857", "40.8130871", ""),
    ("2p1/2", 1, 1, 1, "40.8130301", "40.8130290", ""),
    ("2p3/2", 1, 3, 0, "40.8137552", "40.8137552", ""),
    ("3p3/2", 1, 3, 1, "48.3715051", "48.3715104", ""),
    ("3d3/2", 2, 3, 1, "48.3715093", "48.3715100", ""),
    ("3d5/2", 2, 5, 0, "48.3715808", "48.3715817", ""),
    ("4d5/2", 2, 5, 1, "51.0167772", "51.0167797", ""),
    ("4f5/2", 3, 5, 1, "51.0167794", "51.0167797", ""),
    ("4f7/2", 3, 7, 0, "51.0167945", "51.0167948", ""),
    ("5f7/2", 3, 7, 1, "52.2411401", "52.2411413", ""),
    ("5g7/2", 4, 7, 1, "52.2411412", "52.2411413", ""),
    ("5g9/2", 4, 9, 0, "52.2411458", "52.2411460", ""),
    ("6g9/2", 4, 9, 1, "52.9062220", "52.9062226", ""),
    ("6h9/2", 5, 9, 1, "52.9062225", "52.9062226", ""),
    ("6h11/2", 5, 11, 0, "52.9062243", "52.9062244", ""),
    ("7h11/2", 5, 11, 1, "53.3072441", "53.3072445", ""),
    ("7i11/2", 6, 11, 1, "53.3072445", "53.3072445", ""),
    ("7i13/2", 6, 13, 0, "53.3072453", "53.3072453", ""),
    ("8i13/2", 6, 13, 1, "53.5675225", "53.5675227", ""),
    ("8k13/2", 7, 13, 1, "53.5675227", "53.5675227", ""),
    ("8k15/2", 7, 15, 0, "53.5675231", "53.5675231", ""),
    ("9k15/2", 7, 15, 1, "53.7459683", "53.7459684", ""),
    ("9l15/2", 8, 15, 1, "53.7459684", "53.7459684", ""),
    ("9l17/2", 8, 17, 0, "53.7459686", "53.7459686", ""),
    ("10l17/2", 8, 17, 1, "53.8736094", "53.8736094", ""),
    ("10m17/2", 9, 17, 1, "53.8736095", "53.8736095", ""),
    ("10m19/2", 9, 19, 0, "53.8736096", "53.8736096", ""),
    ("11m19/2", 9, 19, 1, "", "", "mixed"),
    ("11n19/2", 10, 19, 1, "53.9680495", "53.9680494", ""),
    ("11n21/2", 10, 21, 0, "53.9680495", "53.9680495", ""),
    ("12o21/2", 10, 21, 1, "54.0398788", "54.0398788", ""),
    ("12o23/2", 11, 23, 0, "", "", "mixed"),
    ("13q23/2", 11, 23, 1, "54.0957789", "54.0957788", ""),
    ("13q25/2", 12, 25, 0, "", "", "absent"),
    ("14r25/2", 12, 25, 1, "54.1401338", "54.1401338", ""),
    ("14r27/2", 13, 27, 0, "", "", "absent"),
    ("15t27/2", 13, 27, 1, "54.1759171", "54.1759171", ""),
    ("15t29/2", 14, 29, 0, "54.1759172", "", "mixed"),
    ("16u29/2", 14, 29, 1, "54.2052032", "54.2052031", ""),
    ("16u31/2", 15, 31, 0, "", "", "mixed"),
    ("17v31/2", 15, 31, 1, "54.2294747", "54.2294747", ""),
    ("17v33/2", 16, 33, 0, "", "", "absent"),
    ("18w33/2", 16, 33, 1, "54.2498145", "54.2498145", ""),
    ("18w35/2", 17, 35, 0, "", "", "absent"),
    ("19x35/2", 17, 35, 1, "54.2670281", "54.2670280", ""),
    ("19x37/2", 18, 37, 0, "", "", "absent"),
    ("20y37/2", 18, 37, 1, "54.2817247", "54.2817247", ""),
    ("20y39/2", 19, 39, 0, "", "", "absent"),
]

# --- Hydrogen transition energies (eV).
_H_CALC = [
    ("2s1/2", 0, 1, 1, "10.1988147", "10.1988101", ""),
    ("2p1/2", 1, 1, 1, "10.1988058", "10.1988057", ""),
    ("2p3/2", 1, 3, 0, "10.1988511", "10.1988511", ""),
    ("3p3/2", 1, 3, 1, "12.0875071", "12.0875066", ""),
    ("3d3/2", 2, 3, 1, "12.0875065", "12.0875065", ""),
    ("3d5/2", 2, 5, 0, "12.0875110", "12.0875110", ""),
    ("4d5/2", 2, 5, 1, "12.7485395", "12.7485394", ""),
    ("4f5/2", 3, 5, 1, "12.7485394", "12.7485394", ""),
    ("4f7/2", 3, 7, 0, "12.7485404", "12.7485404", ""),
    ("5f7/2", 3, 7, 1, "13.0545020", "13.0545019", ""),
    ("5g7/2", 4, 7, 1, "13.0545020", "13.0545019", ""),
    ("5g9/2", 4, 9, 0, "13.0545023", "13.0545022", ""),
    ("6g9/2", 4, 9, 1, "", "", "mixed"),
    ("6h9/2", 5, 9, 1, "13.2207036", "13.2207035", ""),
    ("6h11/2", 5, 11, 0, "13.2207037", "13.2207037", ""),
    ("7i11/2", 6, 11, 1, "13.3209178", "13.3209178", ""),
    ("7i13/2", 6, 13, 0, "13.3209179", "13.3209179", ""),
    ("8k13/2", 7, 13, 1, "", "", "mixed"),
    ("8k15/2", 7, 15, 0, "13.3859607", "13.3859607", ""),
    ("9l15/2", 8, 15, 1, "", "", "absent"),
    ("9l17/2", 8, 17, 0, "13.4305539", "13.4305539", ""),
    ("10m17/2", 9, 17, 1, "", "", "absent"),
    ("10m19/2", 9, 19, 0, "13.4624511", "13.4624511", ""),
    ("11n19/2", 10, 19, 1, "", "", "absent"),
    ("11n21/2", 10, 21, 0, "13.4860515", "13.4860514", ""),
    ("12g21/2", 11, 21, 1, "", "", "absent"),
    ("12g23/2", 11, 23, 0, "13.5040014", "13.5040014", ""),
    ("13q23/2", 12, 23, 1, "", "", "absent"),
    ("13q25/2", 12, 25, 0, "13.5179708", "13.5179707", ""),
    ("14r25/2", 13, 25, 1, "", "", "absent"),
    ("14r27/2", 13, 27, 0, "13.5290550", "13.5290550", ""),
    ("15t27/2", 14, 27, 1, "", "", "absent"),
    ("15t29/2", 14, 29, 0, "13.5379972", "13.5379972", ""),
    ("16u29/2", 15, 29, 1, "", "", "absent"),
    ("16u31/2", 15, 31, 0, "13.5453157", "13.5453157", ""),
    ("17v31/2", 16, 31, 1, "", "", "absent"),
    ("17v33/2", 16, 33, 0, "13.5513811", "13.5513811", ""),
    ("18w33/2", 17, 33, 1, "", "", "absent"),
    ("18w35/2", 17, 35, 0, "13.5564640", "13.5564640", ""),
    ("19x35/2", 18, 35, 1, "", "", "absent"),
    ("19x37/2", 18, 37, 0, "13.5607656", "13.5607656", ""),
    ("20y37/2", 19, 37, 1, "", "", "absent"),
    ("20y39/2", 19, 39, 0, "13.5644383", "13.5644383", ""),
]

# --- Li I transition energies (eV); label "n,l".
_LI = [
    (3, 0, "3.373209", "3.373129", ""),
    (3, 1, "3.834250", "3.834258", ""),
    (4, 0, "4.340903", "4.340942", ""),
    (4, 1, "4.521672", "4.521648", ""),
    (4, 2, "4.540778", "4.540720", ""),
    (5, 0, "4.748581", "4.748533", ""),
    (5, 1, "4.837294", "4.837313", ""),
    (5, 2, "4.847048", "4.847153", ""),
    (5, 3, "4.850979", "4.84833", ""),
    (6, 0, "4.957902", "4.957835", ""),
    (6, 1, "5.007840", "5.007826", ""),
    (6, 2, "5.013473", "5.013587", ""),
    (7, 0, "5.079451", "5.07937", ""),
    (7, 1, "5.110292", "5.110300", ""),
    (7, 2, "5.113834", "5.11391", ""),
    (8, 0, "5.156239", "5.15614", ""),
    (8, 1, "5.176603", "5.176542", ""),
    (8, 2, "5.178973", "5.17898", ""),
    (9, 0, "5.207825", "5.20775", ""),
    (9, 1, "5.221969", "5.222000", ""),
    (9, 2, "5.223632", "5.22362", ""),
    (10, 0, "5.156239", "5.15614", "inconsistent"),  # duplicates the 8,0 row
    (10, 1, "5.254363", "5.254346", ""),
    (10, 2, "5.255746", "5.2556", ""),
    (11, 0, "5.270671", "5.2706", ""),
    (11, 1, "5.278298", "5.27790", ""),
    (11, 2, "5.279208", "5.2790", ""),
    (12, 1, "5.296482", "5.296498", ""),
    (12, 2, "5.297182", "5.2972", ""),
    (13, 1, "5.310619", "5.310605", ""),
    (14, 1, "5.321828", "5.321822", ""),
    (15, 1, "5.330863", "5.330764", ""),
    (16, 1, "5.338254", "5.338181", ""),
    (17, 1, "5.344375", "5.344391", ""),
    (18, 1, "5.349503", "5.349541", ""),
    (19, 1, "5.353840", "5.353865", ""),
    (20, 1, "5.357542", "5.357529", ""),
    (21, 1, "5.390727", "5.360724", "inconsistent"),  # calc/obs disagree in print
    (22, 1, "5.363486", "5.363449", ""),
    (26, 1, "5.365893", "5.365907", ""),
    (27, 1, "5.372990", "5.373028", ""),
    (28, 1, "5.374306", "5.374267", ""),
    (29, 1, "5.375488", "5.375323", ""),
    (30, 1, "5.376554", "5.376417", ""),
    (31, 1, "5.377518", "5.377450", ""),
    (32, 1, "5.378393", "5.378225", ""),
    (33, 1, "5.379118", "5.37904", ""),
    (34, 1, "5.379917", "5.37971", ""),
    (35, 1, "5.380582", "5.38034", ""),
    (36, 1, "5.381193", "5.38098", ""),
    (37, 1, "5.381755", "5.38150", ""),
    (38, 1, "5.382273", "5.38198", ""),
    (39, 1, "5.382752", "5.38245", ""),
    (40, 1, "5.383195", "5.38301", ""),
    (41, 1, "5.383607", "5.37351", ""),
    (42, 1, "5.383959", "5.38399", ""),
]

# --- Mirror-nuclide pn-pair level ladders (MeV), spin-orbit calibration.
_MIRROR_LEVELS = {
    "4He": [
        ("0,0+", "14.146", ""),
        ("0,1+", "5.628", ""), ("0,1-", "5.639", ""),
        ("1,0+", "4.231", ""),
        ("0,2+", "2.189", ""), ("0,2-", "2.190", ""),
        ("1,1+", "2.000", ""),
        ("2,0+", "1.514", ""),
        ("3av", "0.616", ""),
        ("4av", "0.024", ""),
        ("2,2+", "-0.004", ""),
        ("3,1+", "-0.048", ""),
        ("4,0+", "-0.158", ""),
        ("0,5+", "-0.371", ""),
    ],
    "6Li": [
        ("0,0+", "21.065", ""),
        ("0,1+", "11.783", ""), ("0,1-", "11.842", ""),
        ("1,0+", "8.304", ""),
        ("0,2+", "6.089", ""), ("0,2-", "6.092", ""),
        ("1,1+", "5.336", ""), ("1,1-", "5.353", ""),
        ("2,0+", "3.974", ""),
        ("3av", "2.723", ""),
        ("4av", "1.403", ""),
        ("5av", "0.612", ""),
        ("6av", "0.142", ""),
        ("6,0+", "-0.120", ""),
    ],
    "8Be": [
        ("0,0+", "21.059", "inconsistent"),  # any Ga matching the rest gives 25.05
        ("0,1+", "16.606", ""), ("0,1-", "16.721", ""),
        ("1,0+", "11.481", ""),
        ("0,2+", "9.880", ""), ("0,2-", "9.888", ""),
        ("1,1+", "8.377", ""), ("1,1-", "8.414", ""),
        ("2,0+", "6.175", ""),
        ("0,3+", "5.902", ""),
        ("1,2+", "5.437", ""),
    ],
    "12C": [
        ("0,0+", "29.445", ""),
        ("0,1+", "22.996", ""),
        ("0,2+", "16.095", ""),
        ("1,0+", "16.006", ""),
        ("1,1+", "13.164", ""),
        ("0,3+", "10.960", ""),
        ("1,2+", "9.794", ""),
        ("2,0+", "9.736", ""),
        ("2,1+", "8.239", ""),
    ],
}

# --- Mirror-nuclide excitations (MeV): label, calc, observed, flags.
_MIRROR_EXCITATIONS = {
    "4He": [
        ("4(0,0-0,1)", "17.036", "", "absent"),
        ("4(0,0-1,0)", "19.930", "20.21", "inconsistent"),  # recomputes to 19.830
        ("4(0,0-0,2)", "23.914", "23.64", ""),
        ("4(0,0-1,1)", "24.295", "24.25", ""),
        ("4(0,0-2,0)", "25.264", "25.28", ""),
        ("4(0,0-3av)", "27.060", "27.42", ""),
        ("4(0,0-4av)", "28.244", "", "absent"),
        ("4(0,0-2,2)", "28.30", "28.31", ""),
        ("4(0,0-3,1)", "28.388", "28.39", ""),
        ("4(0,0-4,0)", "28.628", "28.64", ""),
        ("4(0,0-0,5)", "29.034", "28.67", ""),
    ],
    "6Li": [
        ("2(1,0-0,2)", "2.215", "2.186", ""),
        ("2(1,0-1,1)", "2.968", "", "absent"),
        ("2(0,1-1,0)", "3.479", "3.562", ""),
        ("2(1,0-2,0)", "4.330", "4.312", ""),
        ("2(1,0-3av)", "5.581", "5.366", ""),
        ("4(0,1-1,1)+2(1,0-1,1)", "15.862", "15.8", ""),
        ("4(0,1-2,0)+2(1,0-0,2)", "17.833", "17.958", ""),
        ("4(0,1-3av)+2(1,0-1,1)", "21.09", "21.5", ""),
        ("4(0,1-3av)+2(1,0-3av)", "23.7", "23.39", ""),
        ("4(0,1-3av)+2(1,0-4av)", "25.02", "24.779", ""),
        ("4(0,1-4av)+2(1,0-3av)", "26.34", "26.59", ""),
        ("4(0,1-6av)+2(1,0-6av)", "31.44", "31", ""),
    ],
}

# --- Not-mirror nuclides (MeV): per-nucleon pionic levels and excitations.
_NOTMIRROR = [
    # (system, label, series, calc, obs, flags)
    ("3H", "anchor:3(0,0)-3(0,1)", "excitation", "8.48", "8.481", ""),
    ("4H", "0,0", "level", "6.040", "", ""),
    ("4H", "0,1", "level", "2.379", "", ""),
    ("4H", "1,0", "level", "1.990", "", ""),
    ("4H", "0,2", "level", "1.149", "", ""),
    ("4H", "1,1", "level", "1.108", "", ""),
    ("4H", "2,0", "level", "0.979", "", ""),
    ("4H", "0,3", "level", "0.664", "", ""),
    ("4H", "binding:4(0,1)", "pionic", "9.516", "5.58", ""),
    ("4H", "subtraction", "per-nucleon", "0.984", "", ""),
    ("4H", "1(0,1-1,0)", "excitation", "0.389", "0.31", ""),
    ("4H", "3(0,1)-2(1,0)-1(2av)", "excitation", "2.029", "2.08", ""),
    ("4H", "3(0,1)-1(1,0)-2(2av)", "excitation", "2.891", "2.83", ""),
    ("4H", "3(0,1)-3(2av)", "excitation", "3.753", "", "absent"),
    ("5He", "0,0", "level", "9.055", "", ""),
    ("5He", "0,1", "level", "4.516", "", ""),
    ("5He", "1,0", "level", "3.478", "", ""),
    ("5He", "0,2", "level", "2.359", "", ""),
    ("5He", "1(0,1-1,0)", "excitation", "1.038", "", ""),
    ("6He", "0,0", "level", "7.721", "", ""),
    ("6He", "0,1", "level", "3.471", "", ""),
    ("6He", "1,0", "level", "2.768", "", ""),
    ("6He", "0,2", "level", "1.744", "", ""),
    ("6He", "1,1", "level", "1.653", "", ""),
    ("6He", "2,0", "level", "1.410", "", ""),
    ("6He", "binding:4(0,0)+2(0,1)", "pionic", "37.827", "29.269", ""),
    ("6He", "subtraction", "per-nucleon", "1.43", "", ""),
    ("6He", "1(0,1)-1(2av)", "excitation", "1.773", "1.797", ""),
    ("6He", "1(0,0)+1(0,1)-2(1,0)", "excitation", "5.656", "5.6", ""),
    ("chains", "H", "chain-length", "6", "6", ""),
    ("chains", "He", "chain-length", "10", "10", ""),
    ("chains", "Li", "chain-length", "14", "12", ""),
    ("chains", "Be", "chain-length", "17", "14", ""),
    ("chains", "B", "chain-length", "20", "19", ""),
    ("chains", "C", "chain-length", "23", "22", ""),
    ("chains", "N", "chain-length", "26", "24", ""),
    ("chains", "O", "chain-length", "29", "26", ""),
]

# --- Model constants. The two flagged entries are printed figures that
#     contradict the tables they accompany; the effective replacements
#     sit next to them.
_CONSTANTS = [
    ("", "alpha", "", "7.297352568e-3", "", "paper_calc", ""),
    ("", "electron_mass", "eV", "510998.8918", "", "external", ""),
    ("heII", "reduced_mass", "eV", "510928.873", "", "paper_calc", ""),
    ("heII", "d", "", "0.05634", "", "paper_calc", ""),
    ("heII", "g", "", "0.1487", "", "paper_calc", ""),
    ("heII", "ground_binding", "eV", "54.4177630", "54.418", "paper_calc", ""),
    ("hydrogen", "reduced_mass", "eV", "510720.7446", "", "paper_calc", ""),
    ("hydrogen", "d", "", "0.0731", "", "paper_calc", ""),
    ("hydrogen", "g", "", "0.20193", "", "paper_calc", ""),
    ("hydrogen", "limit", "eV", "13.5984340", "13.5984", "paper_calc", ""),
    ("liI", "mass", "eV", "510952.3", "", "paper_calc", ""),
    ("liI", "limit", "eV", "5.3917191", "", "external", ""),
    ("liI", "limit_calc", "eV", "5.3917291", "5.3917191", "paper_calc", "inconsistent"),
    ("liI", "a_lgt0", "", "0.3083", "", "paper_calc", ""),
    ("liI", "b_lgt0_printed", "", "0.62697", "", "paper_calc", "inconsistent"),
    ("liI", "b_lgt0", "", "0.0269687", "", "paper_calc", ""),
    ("liI", "g_lgt0", "", "7.72", "", "paper_calc", ""),
    ("liI", "a_l0", "", "0.1421", "", "paper_calc", ""),
    ("liI", "b_l0", "", "-0.1375", "", "paper_calc", ""),
    ("liI", "g_l0", "", "-10.255", "", "paper_calc", ""),
    ("nuclei", "nucleon_mass", "MeV", "938", "", "paper_calc", ""),
    ("nuclei", "coulomb_c", "", "0.0035", "", "paper_calc", ""),
    ("nuclei-base", "G", "MeV", "302.316", "", "paper_calc", ""),
    ("nuclei-base", "k", "", "0.3908", "", "paper_calc", ""),
    ("nuclei-base", "d_gluon", "MeV", "0.4317", "", "paper_calc", ""),
    ("nuclei-so", "G", "MeV", "296.511", "", "paper_calc", ""),
    ("nuclei-so", "k", "", "0.3997", "", "paper_calc", ""),
    ("nuclei-so", "d_gluon_printed", "MeV", "0.468", "", "paper_calc", "inconsistent"),
    ("nuclei-so", "d_gluon", "MeV", "0.43753316", "", "paper_calc", ""),
    ("nuclei", "k1", "", "0.2125", "", "paper_calc", ""),
    ("anchors", "deuteron", "MeV", "2.224", "", "external", ""),
    ("anchors", "alpha_particle", "MeV", "28.284", "", "external", ""),
    ("anchors", "alpha_from_masses", "MeV", "28.295674", "", "external", ""),
    ("anchors", "triton", "MeV", "8.481", "", "external", ""),
]

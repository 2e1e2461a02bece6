#pragma once
// Generated by gen_oracles.py (mpmath, 50 digits). Do not edit.

namespace oracle_values {

inline constexpr long long mertens_1e6 = 212;
inline constexpr long long mertens_1e5 = -48;

struct ZetaPoint { const char* s; double sigma, tau; const char* re; const char* im; const char* dre; const char* dim; };
inline const ZetaPoint zeta_points[] = {
    {"2", 2, 0, "1.644934066848226436472415166646025189219", "0.0", "-0.9375482543158437537025740945678649778979", "0.0"},
    {"3", 3, 0, "1.202056903159594285399738161511449990765", "0.0", "-0.1981262428856368533306818215032857968755", "0.0"},
    {"0", 0, 0, "-0.5", "0.0", "-0.9189385332046727417803297364056176398614", "0.0"},
    {"1.5", 1.5, 0, "2.612375348685488343348567567924071630571", "0.0", "-3.932239737431101510706388578406015202693", "0.0"},
    {"-0.5", -0.5, 0, "-0.2078862249773545660173067253970493022263", "0.0", "-0.3608543395999476073474208063639510658849", "0.0"},
    {"0.5+14.13i", 0.5, 14.13, "0.000596077678176382598007384188852719659412", "-0.003698613588497159030425945053560933205912", "0.7822055060330205918452393945189515383471", "0.1275994179521678193955347318056303735395"},
    {"0.5+10i", 0.5, 10, "1.544895220296752766921495888075972644268", "-0.1153364652712733754365914435660597498478", "-0.3609073730915718165638138536964664808918", "-0.003593440735631065623471409788711178838758"},
    {"0.5+3i", 0.5, 3, "0.532736670974232883923384121681119541477", "-0.07889651342583338265620508690597419324271", "0.1917598840927213668592132253936871108472", "-0.07313572886592893227170497270343609903258"},
    {"1.04", 1.04, 0, "25.58012052477011964458781807555762511757", "0.0", "-624.9275733873924490143404739107630939083", "0.0"},
    {"2+5i", 2, 5, "0.8509629436242629572108785359083142124066", "0.09899694613483134722717746048483239204582", "0.07515147990388887399840383710746227006406", "-0.06266933763369438031614267876097284813815"},
    {"-0.5+14.13i", -0.5, 14.13, "-1.181599177419317964332761491352957629853", "-0.322301258851825303522828025614926037109", "1.692727663672321677257050293579667516281", "0.6115018502941855893746199537914522341807"},
    {"3+14.13i", 3, 14.13, "0.8553631610559743780857210838562624180746", "0.0317969922769247091909559372568476321418", "0.1096836937422041253929201893599471175314", "-0.01539135879131659755469302432666231701428"},
    {"1.0001+5i", 1.0001, 5, "0.7602283773205394670759728145474117201769", "0.1785391942317041760231670338538117213402", "0.1074373765012234150368057044426675771913", "-0.09678853897980752236011065140346610453845"},
};

inline const char* pole_product = "1.000000577215737717373499101298208869709";
inline const char* q_l1_s2 = "-0.06771840194669357586590307656362275817679";
inline const char* q_l1_s3 = "-0.1248412382580614247932260714290475597228";
inline const char* q_l1_s1p5 = "-0.03515968378395548274205547784166919952864";
inline const char* q_l1_s1p0001 = "-7.281536096209412076724819421894803451539e-6";
inline const char* landau_14134725 = "0.002493262570925217779654264616803980322928";
inline const char* landau_1413 = "0.002494924076965413865490659253748249187029";
inline const char* m_10 = "0.09047619047619047619047619047619047619048";
inline const char* mcheck_100 = "1.001034524149160431141043449394018673894";
inline const char* mcheck_50 = "0.9996104377616818196513035156779083228152";
inline const char* mdcheck_1000 = "12.66106543992792695403369890912327624586";
inline const char* harmonic_1e6 = "14.39272672286572363138112749318858767664";

} // namespace oracle_values

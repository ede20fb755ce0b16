/*
   Copyright 2026 The fwe-zeta Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Generated from data/golden_table.json; keep the two in sync.

#ifndef FWEZETA_GOLDEN_TABLE_DATA_HPP
#define FWEZETA_GOLDEN_TABLE_DATA_HPP

namespace fwezeta {

/// Extremal formal weight enumerators for n = 12, 20, ..., 196 in symmetric
/// form: the coefficients A_{4j}, j = d/4 .. (n-4)/8. `errata` keeps the
/// originally published string where it disagrees with the exact value.
inline constexpr const char* kGoldenTableJson = R"json([
  {"n": 12, "d": 4, "coefficients": {"4": "-33"}},
  {"n": 20, "d": 4, "coefficients": {"4": "-19", "8": "-494"}},
  {"n": 28, "d": 4, "coefficients": {"4": "-5", "8": "-759", "12": "-7429"}},
  {"n": 36, "d": 8, "coefficients": {"8": "-495", "12": "-19005", "16": "-111573"}},
  {"n": 44, "d": 8, "coefficients": {"8": "-172", "12": "-20167", "16": "-397234", "20": "-1679580"}},
  {"n": 52, "d": 8, "coefficients": {"8": "-45", "12": "-12313", "16": "-617766", "20": "-7509579", "24": "-25414730"}},
  {"n": 60, "d": 12, "coefficients": {"12": "-5605", "16": "-554895", "20": "-15622728", "24": "-134295800", "28": "-386391885"}, "errata": {"24": "-15622728"}},
  {"n": 68, "d": 12, "coefficients": {"12": "-1742", "16": "-342705", "20": "-19114095", "24": "-350115870", "28": "-2321175604", "32": "-5899184577"}},
  {"n": 76, "d": 12, "coefficients": {"12": "-455", "16": "-157788", "20": "-15862224", "24": "-548257680", "28": "-7249325900", "32": "-39225987090", "36": "-90399362336"}},
  {"n": 84, "d": 16, "coefficients": {"16": "-62748", "20": "-9720711", "24": "-584058384", "28": "-13904530512", "32": "-142025799762", "36": "-652738809996", "40": "-1389760273440"}},
  {"n": 92, "d": 16, "coefficients": {"16": "-18564", "20": "-4750200", "24": "-459415320", "28": "-18276716575", "32": "-322921346202", "36": "-2673263269352", "40": "-10743644373000", "44": "-21425802199620"}},
  {"n": 100, "d": 16, "coefficients": {"16": "-4845", "20": "-1906569", "24": "-283417680", "28": "-17759231600", "32": "-508083348150", "36": "-7024438840315", "40": "-48836439768144", "44": "-175426727301360", "48": "-331136219602650"}},
  {"n": 108, "d": 20, "coefficients": {"20": "-707805", "24": "-142345845", "28": "-13483875924", "32": "-592827012162", "36": "-12912473819940", "40": "-145356811396020", "44": "-872012120596695", "48": "-2847442918238100", "52": "-5128868476748502"}},
  {"n": 116, "d": 20, "coefficients": {"20": "-203665", "24": "-61035220", "28": "-8325627860", "32": "-539970141755", "36": "-17686996366552", "40": "-306089064693104", "44": "-2892828876388720", "48": "-15295065179581320", "52": "-46010051597767125", "56": "-79592918004050552"}},
  {"n": 124, "d": 20, "coefficients": {"20": "-53130", "24": "-22587526", "28": "-4320543557", "32": "-399142595247", "36": "-18933376280702", "40": "-483099940106322", "44": "-6866557381558152", "48": "-55812566735037112", "52": "-264497659587312580", "56": "-740865653481227100", "60": "-1237298135226392525"}},
  {"n": 132, "d": 24, "coefficients": {"24": "-8055190", "28": "-1920233370", "32": "-246940710159", "36": "-16432390247845", "40": "-597323869611810", "44": "-12294641192051790", "48": "-147341787206768440", "52": "-1050128724293493768", "56": "-4521938050758467196", "60": "-11897286760705846500", "64": "-19263884178133617165"}},
  {"n": 140, "d": 24, "coefficients": {"24": "-2276820", "28": "-757465210", "32": "-130844977725", "36": "-11905432407540", "40": "-598991736062244", "44": "-17302162719073995", "48": "-295390461241721370", "52": "-3048727593848694660", "56": "-19356087295370216360", "60": "-76589231536103045004", "64": "-190646163336241077465", "68": "-300342296944408633320"}},
  {"n": 148, "d": 24, "coefficients": {"24": "-593775", "28": "-265687763", "32": "-60626687121", "36": "-7369909114334", "40": "-500856000132642", "44": "-19772475234348690", "48": "-467244030396146094", "52": "-6767638484266988559", "56": "-61210009702624439541", "60": "-350734164704203152873", "64": "-1287227549859336458945", "68": "-3049794439066320485652", "72": "-4688511639130106191404"}},
  {"n": 156, "d": 28, "coefficients": {"28": "-92385735", "32": "-24801039900", "36": "-3974981408320", "40": "-357147810452160", "44": "-18838478219043600", "48": "-601305738440206800", "52": "-11903058986903663040", "56": "-149015116832397271872", "60": "-1198277004601232375820", "64": "-6264996268248174364050", "68": "-21495202711204378665600", "72": "-48721749082300406652800", "76": "-73273963704290809308576"}},
  {"n": 164, "d": 28, "coefficients": {"28": "-25790512", "32": "-9233515116", "36": "-1895408784087", "40": "-221270131479600", "44": "-15290974644495840", "48": "-645538939197188400", "52": "-17073473360477368176", "56": "-288709937439922777568", "60": "-3172914113669269549776", "64": "-22961929471005530775042", "68": "-110560597088721242234940", "72": "-356999855309914228424400", "76": "-777499897249986858851904", "80": "-1146350001532072178176992"}},
  {"n": 172, "d": 28, "coefficients": {"28": "-6724520", "32": "-3117932532", "36": "-810694410656", "40": "-120949446496032", "44": "-10765336143514095", "48": "-590217737326799400", "52": "-20452419017792980416", "56": "-457425536986817800128", "60": "-6716660868222566243736", "64": "-65655567144166964191370", "68": "-432049241644493521436640", "72": "-1931022707448499094213472", "76": "-5901887812416818000710932", "80": "-12396360119130854562120984", "84": "-17951455639954237535022720"}},
  {"n": 180, "d": 32, "coefficients": {"32": "-1066449780", "36": "-312308624680", "40": "-59122804799520", "44": "-6673483559682720", "48": "-467612005564042920", "52": "-20870036989598966895", "56": "-606173904040335768000", "60": "-11661733376109411334080", "64": "-150770765081343953853450", "68": "-1325608423224821146949400", "72": "-8002717084203811002888800", "76": "-33428025572996839645697760", "80": "-97185266328167090509747608", "84": "-197504585877104399583402900", "88": "-281360756340249766957353600"}},
  {"n": 188, "d": 32, "coefficients": {"32": "-294998484", "36": "-111445052576", "40": "-26099681914240", "44": "-3689805827584200", "48": "-325758365331044360", "52": "-18445863562437861440", "56": "-684711621741553803808", "60": "-16966016533937895991567", "64": "-284860403664169699215850", "68": "-3281429481419712054419680", "72": "-26201199634385650653064000", "76": "-146228109419292198131352376", "80": "-574233656555043347026617464", "84": "-1594905997813459117303489280", "88": "-3144907665495143232420795488", "92": "-4413459725977141147435788980"}},
  {"n": 196, "d": 32, "coefficients": {"32": "-76904685", "36": "-36580739273", "40": "-10518107102912", "44": "-1839425553426240", "48": "-202055163118166800", "52": "-14322874390073948080", "56": "-669909048673946917056", "60": "-21059701862665139595584", "64": "-451896822437175266776950", "68": "-6704657067863573109515835", "72": "-69523694441231755530686400", "76": "-508364721051285300494140992", "80": "-2640396051179528070347697168", "84": "-9798327455362797587376378160", "88": "-26097134996226616755233810880", "92": "-50053424263353462264963577920", "96": "-69281975548885761832168515738"}}
]
)json";

}  // namespace fwezeta

#endif  // FWEZETA_GOLDEN_TABLE_DATA_HPP

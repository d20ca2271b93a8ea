// Generated by tools/gen_tw2_table.py. Do not edit.
#pragma once

#include <array>

namespace rissense::detail {

inline constexpr double kTw2GridMin = -7.0;
inline constexpr double kTw2GridStep = 0.01;
inline constexpr std::array<double, 1151> kTw2Cdf = {
    2.63961477592229712e-13, 2.98362014722982014e-13, 3.37128011042089740e-13, 3.80798027023884548e-13,
    4.29975096626017170e-13, 4.85334199076945614e-13, 5.47630570618825353e-13, 6.17708940109131714e-13,
    6.96513793733330974e-13, 7.85100773831310218e-13, 8.84649335833471377e-13, 9.96476796527288369e-13,
    1.12205391746643873e-12, 1.26302219256514643e-12, 1.42121300603221086e-12, 1.59866887285441814e-12,
    1.79766696003052237e-12, 2.02074513924637686e-12, 2.27073082677351283e-12, 2.55077289151264881e-12,
    2.86437695844967764e-12, 3.21544443557413251e-12, 3.60831566302164323e-12, 4.04781757688292422e-12,
    4.53931636616532818e-12, 5.08877560892795375e-12, 5.70282042816201984e-12, 6.38880829182187162e-12,
    7.15490707989553818e-12, 8.01018116833123635e-12, 8.96468628193130392e-12, 1.00295740174503811e-11,
    1.12172069167979681e-11, 1.25412851871504502e-11, 1.40169861182405997e-11, 1.56611174657055987e-11,
    1.74922861278711437e-11, 1.95310835412399243e-11, 2.18002894371923384e-11, 2.43250956162601810e-11,
    2.71333517238569231e-11, 3.02558349613468908e-11, 3.37265460824307380e-11, 3.75830340402301629e-11,
    4.18667519360398931e-11, 4.66234472063626305e-11, 5.19035890598216054e-11, 5.77628367646323537e-11,
    6.42625521987272529e-11, 7.14703609922045802e-11, 7.94607663571779123e-11, 8.83158204570080239e-11,
    9.81258584479873080e-11, 1.08990300649235563e-10, 1.21018529030232401e-10, 1.34330844267442264e-10,
    1.49059510845035683e-10, 1.65349897333427756e-10, 1.83361720565342055e-10, 2.03270402449931348e-10,
    2.25268549025034412e-10, 2.49567562443129623e-10, 2.76399396884283304e-10, 3.06018470975789919e-10,
    3.38703749339142387e-10, 3.74761008178693831e-10, 4.14525299514981475e-10, 4.58363631118374654e-10,
    5.06677879802546630e-10, 5.59907957006615337e-10, 6.18535247872933646e-10, 6.83086345353556349e-10,
    7.54137104261987359e-10, 8.32317039756979117e-10, 9.18314099303523302e-10, 1.01287983690185564e-09,
    1.11683502181350931e-09, 1.23107571668857516e-09, 1.35657986092606559e-09, 1.49441440013779564e-09,
    1.64574300268029811e-09, 1.81183441077872700e-09, 1.99407147267243450e-09, 2.19396091014110157e-09,
    2.41314387666682745e-09, 2.65340736554472613e-09, 2.91669653389125335e-09, 3.20512800877956832e-09,
    3.52100425219197470e-09, 3.86682905944891317e-09, 4.24532427918663125e-09, 4.65944784068833376e-09,
    5.11241318716641596e-09, 5.60771021614705269e-09, 6.14912783466627214e-09, 6.74077824893509783e-09,
    7.38712310733695780e-09, 8.09300163541367056e-09, 8.86366089595197356e-09, 9.70478833137926882e-09,
    1.06225467427046927e-08, 1.16236118757161137e-08, 1.27152127987939955e-08, 1.39051752565926823e-08,
    1.52019682126723632e-08, 1.66147537881044028e-08, 1.81534408352840197e-08, 1.98287423831756020e-08,
    2.16522372174843685e-08, 2.36364358710600794e-08, 2.57948513101752456e-08, 2.81420746333985244e-08,
    3.06938561014025399e-08, 3.34671918527506802e-08, 3.64804166619388907e-08, 3.97533031374907314e-08,
    4.33071677641916714e-08, 4.71649842199651199e-08, 5.13515044367969804e-08, 5.58933878735623010e-08,
    6.08193395290469146e-08, 6.61602572148143291e-08, 7.19493886793423498e-08, 7.82224991569587595e-08,
    8.50180500015877071e-08, 9.23773890490420849e-08, 1.00344953416842917e-07, 1.08968485492554542e-07,
    1.18299262861547271e-07, 1.28392343025477854e-07, 1.39306823732632741e-07, 1.51106119868630525e-07,
    1.63858257812051800e-07, 1.77636188286037822e-07, 1.92518118738151582e-07, 2.08587866343853242e-07,
    2.25935232800649674e-07, 2.44656402094669319e-07, 2.64854362545273794e-07, 2.86639354399422215e-07,
    3.10129344422565138e-07, 3.35450528895132467e-07, 3.62737866544063151e-07, 3.92135643025259515e-07,
    4.23798068566620628e-07, 4.57889910570488360e-07, 4.94587162913847024e-07, 5.34077753923467695e-07,
    5.76562294901256005e-07, 6.22254871353701945e-07, 6.71383879006427401e-07, 7.24192906841970637e-07,
    7.80941669543822651e-07, 8.41906991684201970e-07, 9.07383846263247932e-07, 9.77686450135579854e-07,
    1.05314941914271863e-06, 1.13412898568346758e-06, 1.22100428173958979e-06, 1.31417869038114984e-06,
    1.41408126889162390e-06, 1.52116824685646037e-06, 1.63592460253779071e-06, 1.75886572115877639e-06,
    1.89053913863431125e-06, 2.03152637463348843e-06, 2.18244485881636394e-06, 2.34394995427219135e-06,
    2.51673708243155061e-06, 2.70154395360570519e-06, 2.89915290778738116e-06, 3.11039337011278306e-06,
    3.33614442591866549e-06, 3.57733752006131564e-06, 3.83495928573146560e-06, 4.11005450779477279e-06,
    4.40372922598581961e-06, 4.71715398357797459e-06, 5.05156722690808747e-06, 5.40827886180950582e-06,
    5.78867397259287243e-06, 6.19421670997075595e-06, 6.62645435385952913e-06, 7.08702155765020222e-06,
    7.57764478047555596e-06, 8.10014691398776746e-06, 8.65645211080388103e-06, 9.24859082124961755e-06,
    9.87870504594840283e-06, 1.05490538110872238e-05, 1.12620188742769294e-05, 1.20201106682350826e-05,
    1.28259744900691273e-05, 1.36823969442600158e-05, 1.45923126468953506e-05, 1.55588111997571090e-05,
    1.65851444420092952e-05, 1.76747339883449842e-05, 1.88311790615223436e-05, 2.00582646283590749e-05,
    2.13599698475567294e-05, 2.27404768381168459e-05, 2.42041797775161269e-05, 2.57556943380402291e-05,
    2.73998674709003723e-05, 2.91417875465734444e-05, 3.09867948610847391e-05, 3.29404925167965857e-05,
    3.50087576872897281e-05, 3.71977532755948304e-05, 3.95139399743779554e-05, 4.19640887382484185e-05,
    4.45552936763055803e-05, 4.72949853750732560e-05, 5.01909446600602238e-05, 5.32513168057174719e-05,
    5.64846262022360439e-05, 5.98997914882192477e-05, 6.35061411582794129e-05, 6.73134296535243039e-05,
    7.13318539443671214e-05, 7.55720706127992864e-05, 8.00452134436432499e-05, 8.47629115314266733e-05,
    8.97373079113368744e-05, 9.49810787218779924e-05, 1.00507452905505774e-04, 1.06330232455486209e-04,
    1.12463813214139051e-04, 1.18923206230225754e-04, 1.25724059679890632e-04, 1.32882681358118817e-04,
    1.40416061744865519e-04, 1.48341897650651667e-04, 1.56678616446710592e-04, 1.65445400882099691e-04,
    1.74662214492480623e-04, 1.84349827601863769e-04, 1.94529843921018605e-04, 2.05224727742444403e-04,
    2.16457831734405610e-04, 2.28253425333562490e-04, 2.40636723735481719e-04, 2.53633917483371356e-04,
    2.67272202651398360e-04, 2.81579811622092242e-04, 2.96586044452501626e-04, 3.12321300827049259e-04,
    3.28817112590297945e-04, 3.46106176855110739e-04, 3.64222389679298144e-04, 3.83200880302395585e-04,
    4.03078045935378350e-04, 4.23891587092319175e-04, 4.45680543455334339e-04, 4.68485330258934822e-04,
    4.92347775184049296e-04, 5.17311155745974393e-04, 5.43420237162140808e-04, 5.70721310685081448e-04,
    5.99262232381575933e-04, 6.29092462342483892e-04, 6.60263104301479255e-04, 6.92826945644697215e-04,
    7.26838497787792807e-04, 7.62354036899134490e-04, 7.99431644944118046e-04, 8.38131251025695987e-04,
    8.78514672995035621e-04, 9.20645659303799698e-04, 9.64589931069973795e-04, 1.01041522432559149e-03,
    1.05819133241682843e-03, 1.10799014852139776e-03, 1.15988570825056305e-03, 1.21395423230056219e-03,
    1.27027416911488253e-03, 1.32892623752226837e-03, 1.38999346930832306e-03, 1.45356125168279388e-03,
    1.51971736959842616e-03, 1.58855204788080741e-03, 1.66015799312303888e-03, 1.73463043530025680e-03,
    1.81206716905922267e-03, 1.89256859463195985e-03, 1.97623775832773442e-03, 2.06318039255113479e-03,
    2.15350495529683869e-03, 2.24732266906702526e-03, 2.34474755916050208e-03, 2.44589649127760012e-03,
    2.55088920838635047e-03, 2.65984836679473589e-03, 2.77289957136997185e-03, 2.89017140985089061e-03,
    3.01179548618992756e-03, 3.13790645287100696e-03, 3.26864204213893556e-03, 3.40414309608265539e-03,
    3.54455359551060934e-03, 3.69002068755594275e-03, 3.84069471195160831e-03, 3.99672922591056464e-03,
    4.15828102755106538e-03, 4.32551017780190023e-03, 4.49858002072725267e-03, 4.67765720220549800e-03,
    4.86291168690113941e-03, 5.05451677346547244e-03, 5.25264910790355661e-03, 5.45748869504623403e-03,
    5.66921890806266256e-03, 5.88802649595290828e-03, 6.11410158895972413e-03, 6.34763770183725557e-03,
    6.58883173491759972e-03, 6.83788397291555314e-03, 7.09499808141267774e-03, 7.36038110096382241e-03,
    7.63424343876810928e-03, 7.91679885785046868e-03, 8.20826446369844580e-03, 8.50886068830100303e-03,
    8.81881127153896077e-03, 9.13834323987485625e-03, 9.46768688229611757e-03, 9.80707572346226422e-03,
    1.01567464940126584e-02, 1.05169390979905786e-02, 1.08878965773421110e-02, 1.12698650734519221e-02,
    1.16630937856762179e-02, 1.20678349268405032e-02, 1.24843436756668733e-02, 1.29128781261027212e-02,
    1.33536992335214714e-02, 1.38070707577702748e-02, 1.42732592030427163e-02, 1.47525337545547034e-02,
    1.52451662120092306e-02, 1.57514309198313503e-02, 1.62716046941669447e-02, 1.68059667466319215e-02,
    1.73547986048101510e-02, 1.79183840294957243e-02, 1.84970089286796598e-02, 1.90909612682899910e-02,
    1.97005309796841818e-02, 2.03260098639137764e-02, 2.09676914927679550e-02, 2.16258711066183267e-02,
    2.23008455090827340e-02, 2.29929129585352138e-02, 2.37023730564877716e-02, 2.44295266328764180e-02,
    2.51746756282875510e-02, 2.59381229731613129e-02, 2.67201724640158365e-02, 2.75211286367369572e-02,
    2.83412966369847412e-02, 2.91809820877672252e-02, 3.00404909542410122e-02, 3.09201294057961026e-02,
    3.18202036754909531e-02, 3.27410199169041044e-02, 3.36828840584742564e-02, 3.46461016554009613e-02,
    3.56309777391863175e-02, 3.66378166648978695e-02, 3.76669219562376784e-02, 3.87185961485032315e-02,
    3.97931406295369480e-02, 4.08908554787510148e-02, 4.20120393043332332e-02, 4.31569890787273855e-02,
    4.43259999724968934e-02, 4.55193651866754173e-02, 4.67373757837151946e-02, 4.79803205171435640e-02,
    4.92484856600460749e-02, 5.05421548324883133e-02, 5.18616088280005536e-02, 5.32071254392457865e-02,
    5.45789792829948772e-02, 5.59774416245363282e-02, 5.74027802016486358e-02, 5.88552590482663424e-02,
    6.03351383179702577e-02, 6.18426741074375522e-02, 6.33781182799869475e-02, 6.49417182893531342e-02,
    6.65337170038318021e-02, 6.81543525309311338e-02, 6.98038580426734584e-02, 7.14824616016827563e-02,
    7.31903859882047925e-02, 7.49278485281979073e-02, 7.66950609226385027e-02, 7.84922290781835952e-02,
    8.03195529393338770e-02, 8.21772263222378396e-02, 8.40654367502796790e-02, 8.59843652915952550e-02,
    8.79341863986554534e-02, 8.99150677500566847e-02, 9.19271700946615311e-02, 9.39706470982230174e-02,
    9.60456451926389038e-02, 9.81523034279603163e-02, 1.00290753327302862e-01, 1.02461118744780172e-01,
    1.04663515726601930e-01, 1.06898052375462460e-01, 1.09164828718342280e-01, 1.11463936577857040e-01,
    1.13795459447266059e-01, 1.16159472369275624e-01, 1.18556041818733596e-01, 1.20985225589353984e-01,
    1.23447072684563647e-01, 1.25941623212592391e-01, 1.28468908285907985e-01, 1.31028949925095839e-01,
    1.33621760967290226e-01, 1.36247344979242624e-01, 1.38905696175130822e-01, 1.41596799339181706e-01,
    1.44320629753210694e-01, 1.47077153129141963e-01, 1.49866325546593709e-01, 1.52688093395601715e-01,
    1.55542393324541978e-01, 1.58429152193329703e-01, 1.61348287031933851e-01, 1.64299705004285923e-01,
    1.67283303377609133e-01, 1.70298969497236996e-01, 1.73346580766944786e-01, 1.76426004634838013e-01,
    1.79537098584832494e-01, 1.82679710133742873e-01, 1.85853676834018461e-01, 1.89058826282122977e-01,
    1.92294976132592971e-01, 1.95561934117761044e-01, 1.98859498073166913e-01, 2.02187455968642515e-01,
    2.05545585945063114e-01, 2.08933656356761865e-01, 2.12351425819585105e-01, 2.15798643264569545e-01,
    2.19275047997211175e-01, 2.22780369762301478e-01, 2.26314328814293919e-01, 2.29876635993152778e-01,
    2.33466992805654583e-01, 2.37085091512073021e-01, 2.40730615218217786e-01, 2.44403237972739051e-01,
    2.48102624869670024e-01, 2.51828432156102844e-01, 2.55580307344957625e-01, 2.59357889332751945e-01,
    2.63160808522295786e-01, 2.66988686950227594e-01, 2.70841138419301741e-01, 2.74717768635347193e-01,
    2.78618175348778585e-01, 2.82541948500590057e-01, 2.86488670372702536e-01, 2.90457915742581008e-01,
    2.94449252041994680e-01, 2.98462239519821260e-01, 3.02496431408770361e-01, 3.06551374095914209e-01,
    3.10626607296905888e-01, 3.14721664233747145e-01, 3.18836071816002486e-01, 3.22969350825313639e-01,
    3.27121016103083528e-01, 3.31290576741212539e-01, 3.35477536275730237e-01, 3.39681392883203370e-01,
    3.43901639579772211e-01, 3.48137764422678686e-01, 3.52389250714138680e-01, 3.56655577207428243e-01,
    3.60936218315023205e-01, 3.65230644318660036e-01, 3.69538321581167339e-01, 3.73858712759914336e-01,
    3.78191277021747763e-01, 3.82535470259244059e-01, 3.86890745308153206e-01, 3.91256552165863136e-01,
    3.95632338210759660e-01, 4.00017548422315572e-01, 4.04411625601765801e-01, 4.08814010593228805e-01,
    4.13224142505114356e-01, 4.17641458931685139e-01, 4.22065396174614305e-01, 4.26495389464400465e-01,
    4.30930873181499141e-01, 4.35371281077021111e-01, 4.39816046492862156e-01, 4.44264602581119217e-01,
    4.48716382522667379e-01, 4.53170819744740050e-01, 4.57627348137396917e-01, 4.62085402268733791e-01,
    4.66544417598719341e-01, 4.71003830691503589e-01, 4.75463079426100110e-01, 4.79921603205298697e-01,
    4.84378843162689532e-01, 4.88834242367690686e-01, 4.93287246028441040e-01, 4.97737301692465051e-01,
    5.02183859444981784e-01, 5.06626372104760692e-01, 5.11064295417410164e-01, 5.15497088245993385e-01,
    5.19924212758885895e-01, 5.24345134614756625e-01, 5.28759323144597060e-01, 5.33166251530689861e-01,
    5.37565396982445876e-01, 5.41956240909014286e-01, 5.46338269088584183e-01, 5.50710971834303620e-01,
    5.55073844156738661e-01, 5.59426385922805136e-01, 5.63768102011095507e-01, 5.68098502463547872e-01,
    5.72417102633380637e-01, 5.76723423329258522e-01, 5.81016990955605217e-01, 5.85297337649038463e-01,
    5.89564001410863514e-01, 5.93816526235583453e-01, 5.98054462235400375e-01, 6.02277365760642724e-01,
    6.06484799516108786e-01, 6.10676332673287359e-01, 6.14851540978425648e-01, 6.19010006856426598e-01,
    6.23151319510551138e-01, 6.27275075017906802e-01, 6.31380876420717496e-01, 6.35468333813357433e-01,
    6.39537064425137691e-01, 6.43586692698852714e-01, 6.47616850365080765e-01, 6.51627176512231787e-01,
    6.55617317652366971e-01, 6.59586927782778720e-01, 6.63535668443358317e-01, 6.67463208769752403e-01,
    6.71369225542336356e-01, 6.75253403231014904e-01, 6.79115434035884258e-01, 6.82955017923764673e-01,
    6.86771862660650934e-01, 6.90565683840094757e-01, 6.94336204907560761e-01, 6.98083157180790392e-01,
    7.01806279866209470e-01, 7.05505320071424080e-01, 7.09180032813836680e-01, 7.12830181025444265e-01,
    7.16455535553848222e-01, 7.20055875159533398e-01, 7.23630986509466667e-01, 7.27180664167064172e-01,
    7.30704710578586769e-01, 7.34202936056012390e-01, 7.37675158756448734e-01, 7.41121204658144683e-01,
    7.44540907533160268e-01, 7.47934108916758489e-01, 7.51300658073573602e-01, 7.54640411960645574e-01,
    7.57953235187350804e-01, 7.61238999972330022e-01, 7.64497586097455994e-01, 7.67728880858930651e-01,
    7.70932779015566449e-01, 7.74109182734327939e-01, 7.77258001533211007e-01, 7.80379152221524652e-01,
    7.83472558837648436e-01, 7.86538152584345784e-01, 7.89575871761700743e-01, 7.92585661697755017e-01,
    7.95567474676924569e-01, 7.98521269866256267e-01, 8.01447013239623973e-01, 8.04344677499909899e-01,
    8.07214241999278714e-01, 8.10055692657591808e-01, 8.12869021879054965e-01, 8.15654228467164177e-01,
    8.18411317538041194e-01, 8.21140300432208314e-01, 8.23841194624899464e-01, 8.26514023634975725e-01,
    8.29158816932513809e-01, 8.31775609845144426e-01, 8.34364443463222027e-01, 8.36925364543880890e-01,
    8.39458425414068343e-01, 8.41963683872613777e-01, 8.44441203091413239e-01, 8.46891051515786475e-01,
    8.49313302764096889e-01, 8.51708035526681950e-01, 8.54075333464174302e-01, 8.56415285105274204e-01,
    8.58727983744046686e-01, 8.61013527336800810e-01, 8.63272018398618224e-01, 8.65503563899596595e-01,
    8.67708275160864684e-01, 8.69886267750435871e-01, 8.72037661378957885e-01, 8.74162579795414674e-01,
    8.76261150682844936e-01, 8.78333505554124816e-01, 8.80379779647882943e-01, 8.82400111824584332e-01,
    8.84394644462857649e-01, 8.86363523356101579e-01, 8.88306897609426271e-01, 8.90224919536977799e-01,
    8.92117744559701165e-01, 8.93985531103578146e-01, 8.95828440498391276e-01, 8.97646636877062254e-01,
    8.99440287075595979e-01, 9.01209560533687837e-01, 9.02954629196020098e-01, 9.04675667414299389e-01,
    9.06372851850059780e-01, 9.08046361378282540e-01, 9.09696376991859679e-01, 9.11323081706933213e-01,
    9.12926660469149387e-01, 9.14507300060857564e-01, 9.16065189009283687e-01, 9.17600517495702372e-01,
    9.19113477265644740e-01, 9.20604261540164059e-01, 9.22073064928180641e-01, 9.23520083339933517e-01,
    9.24945513901569205e-01, 9.26349554870873892e-01, 9.27732405554174022e-01, 9.29094266224446130e-01,
    9.30435338040613069e-01, 9.31755822968079461e-01, 9.33055923700508938e-01, 9.34335843582852266e-01,
    9.35595786535645790e-01, 9.36835956980598517e-01, 9.38056559767463827e-01, 9.39257800102226259e-01,
    9.40439883476584471e-01, 9.41603015598775461e-01, 9.42747402325710637e-01, 9.43873249596459352e-01,
    9.44980763367057941e-01, 9.46070149546680783e-01, 9.47141613935140070e-01, 9.48195362161752486e-01,
    9.49231599625543154e-01, 9.50250531436811041e-01, 9.51252362360044179e-01, 9.52237296758180807e-01,
    9.53205538538231423e-01, 9.54157291098229776e-01, 9.55092757275543769e-01, 9.56012139296519070e-01,
    9.56915638727454665e-01, 9.57803456426908228e-01, 9.58675792499326107e-01, 9.59532846249992466e-01,
    9.60374816141276955e-01, 9.61201899750188105e-01, 9.62014293727224357e-01, 9.62812193756493961e-01,
    9.63595794517119630e-01, 9.64365289645899071e-01, 9.65120871701218186e-01, 9.65862732128203727e-01,
    9.66591061225106407e-01, 9.67306048110898486e-01, 9.68007880694070511e-01, 9.68696745642629531e-01,
    9.69372828355261285e-01, 9.70036312933662881e-01, 9.70687382156026235e-01, 9.71326217451644935e-01,
    9.71952998876654761e-01, 9.72567905090870766e-01, 9.73171113335712601e-01, 9.73762799413204871e-01,
    9.74343137666040193e-01, 9.74912300958675759e-01, 9.75470460659461081e-01, 9.76017786623767147e-01,
    9.76554447178121898e-01, 9.77080609105304587e-01, 9.77596437630410153e-01, 9.78102096407848398e-01,
    9.78597747509276084e-01, 9.79083551412421094e-01, 9.79559666990814093e-01, 9.80026251504380053e-01,
    9.80483460590887534e-01, 9.80931448258238858e-01, 9.81370366877576950e-01, 9.81800367177193323e-01,
    9.82221598237225990e-01, 9.82634207485121869e-01, 9.83038340691844370e-01, 9.83434141968821729e-01,
    9.83821753765606655e-01, 9.84201316868231979e-01, 9.84572970398249092e-01, 9.84936851812426850e-01,
    9.85293096903102184e-01, 9.85641839799153097e-01, 9.85983212967586287e-01, 9.86317347215722950e-01,
    9.86644371693957689e-01, 9.86964413899083848e-01, 9.87277599678163864e-01, 9.87584053232925085e-01,
    9.87883897124674726e-01, 9.88177252279707652e-01, 9.88464237995194783e-01, 9.88744971945544560e-01,
    9.89019570189200503e-01, 9.89288147175891419e-01, 9.89550815754286495e-01, 9.89807687180061069e-01,
    9.90058871124354756e-01, 9.90304475682600382e-01, 9.90544607383716191e-01, 9.90779371199646430e-01,
    9.91008870555232124e-01, 9.91233207338401368e-01, 9.91452481910669814e-01, 9.91666793117926382e-01,
    9.91876238301507174e-01, 9.92080913309521417e-01, 9.92280912508451629e-01, 9.92476328794977491e-01,
    9.92667253608036870e-01, 9.92853776941100774e-01, 9.93035987354662586e-01, 9.93213971988904154e-01,
    9.93387816576561722e-01, 9.93557605455953285e-01, 9.93723421584168820e-01, 9.93885346550415383e-01,
    9.94043460589491334e-01, 9.94197842595401560e-01, 9.94348570135085708e-01, 9.94495719462254901e-01,
    9.94639365531336805e-01, 9.94779582011501518e-01, 9.94916441300776611e-01, 9.95050014540236782e-01,
    9.95180371628246907e-01, 9.95307581234779137e-01, 9.95431710815760429e-01, 9.95552826627473908e-01,
    9.95670993740982557e-01, 9.95786276056587982e-01, 9.95898736318297173e-01, 9.96008436128305918e-01,
    9.96115435961485773e-01, 9.96219795179864365e-01, 9.96321572047104254e-01, 9.96420823742952488e-01,
    9.96517606377687160e-01, 9.96611975006516881e-01, 9.96703983643966507e-01, 9.96793685278203778e-01,
    9.96881131885342553e-01, 9.96966374443680969e-01, 9.97049462947895870e-01, 9.97130446423170058e-01,
    9.97209372939268146e-01, 9.97286289624531030e-01, 9.97361242679808191e-01, 9.97434277392311719e-01,
    9.97505438149389079e-01, 9.97574768452215155e-01, 9.97642310929392373e-01, 9.97708107350469331e-01,
    9.97772198639353181e-01, 9.97834624887639965e-01, 9.97895425367831934e-01, 9.97954638546463380e-01,
    9.98012302097110449e-01, 9.98068452913304704e-01, 9.98123127121327780e-01, 9.98176360092899895e-01,
    9.98228186457749467e-01, 9.98278640116069260e-01, 9.98327754250854960e-01, 9.98375561340117179e-01,
    9.98422093168986224e-01, 9.98467380841675967e-01, 9.98511454793337028e-01, 9.98554344801777627e-01,
    9.98596079999059860e-01, 9.98636688882968193e-01, 9.98676199328345837e-01, 9.98714638598306115e-01,
    9.98752033355310043e-01, 9.98788409672113575e-01, 9.98823793042583286e-01, 9.98858208392378599e-01,
    9.98891680089502687e-01, 9.98924231954719577e-01, 9.98955887271837595e-01, 9.98986668797858579e-01,
    9.99016598772999198e-01, 9.99045698930566051e-01, 9.99073990506711640e-01, 9.99101494250047018e-01,
    9.99128230431124864e-01, 9.99154218851788234e-01, 9.99179478854388514e-01, 9.99204029330866383e-01,
    9.99227888731706426e-01, 9.99251075074755746e-01, 9.99273605953914457e-01, 9.99295498547692729e-01,
    9.99316769627641044e-01, 9.99337435566645560e-01, 9.99357512347106569e-01, 9.99377015568974070e-01,
    9.99395960457666321e-01, 9.99414361871860280e-01, 9.99432234311156020e-01, 9.99449591923613379e-01,
    9.99466448513174566e-01, 9.99482817546951674e-01, 9.99498712162400382e-01, 9.99514145174375424e-01,
    9.99529129082056045e-01, 9.99543676075764886e-01, 9.99557798043660961e-01, 9.99571506578320945e-01,
    9.99584812983203785e-01, 9.99597728278998732e-01, 9.99610263209866456e-01, 9.99622428249564710e-01,
    9.99634233607460398e-01, 9.99645689234438417e-01, 9.99656804828703005e-01, 9.99667589841462312e-01,
    9.99678053482520146e-01, 9.99688204725754481e-01, 9.99698052314497598e-01, 9.99707604766811531e-01,
    9.99716870380666145e-01, 9.99725857239015081e-01, 9.99734573214772992e-01, 9.99743025975703525e-01,
    9.99751222989200494e-01, 9.99759171526985235e-01, 9.99766878669705705e-01, 9.99774351311444431e-01,
    9.99781596164138642e-01, 9.99788619761910136e-01, 9.99795428465306113e-01, 9.99802028465458070e-01,
    9.99808425788151767e-01, 9.99814626297812148e-01, 9.99820635701410221e-01, 9.99826459552290103e-01,
    9.99832103253906257e-01, 9.99837572063494662e-01, 9.99842871095656283e-01, 9.99848005325872591e-01,
    9.99852979593939262e-01, 9.99857798607331150e-01, 9.99862466944490103e-01, 9.99866989058051048e-01,
    9.99871369277984368e-01, 9.99875611814678655e-01, 9.99879720761954194e-01, 9.99883700100011930e-01,
    9.99887553698309173e-01, 9.99891285318380896e-01, 9.99894898616591865e-01, 9.99898397146829376e-01,
    9.99901784363134816e-01, 9.99905063622273826e-01, 9.99908238186252185e-01, 9.99911311224768284e-01,
    9.99914285817614767e-01, 9.99917164957022098e-01, 9.99919951549947728e-01, 9.99922648420310978e-01,
    9.99925258311179843e-01, 9.99927783886905952e-01, 9.99930227735199240e-01, 9.99932592369170203e-01,
    9.99934880229310097e-01, 9.99937093685430600e-01, 9.99939235038554974e-01, 9.99941306522764695e-01,
    9.99943310307003119e-01, 9.99945248496826977e-01, 9.99947123136129323e-01, 9.99948936208808870e-01,
    9.99950689640405233e-01, 9.99952385299688551e-01, 9.99954025000212909e-01, 9.99955610501837011e-01,
    9.99957143512193003e-01, 9.99958625688131653e-01, 9.99960058637125782e-01, 9.99961443918641835e-01,
    9.99962783045469816e-01, 9.99964077485028469e-01, 9.99965328660630925e-01, 9.99966537952720502e-01,
    9.99967706700078507e-01, 9.99968836200992195e-01, 9.99969927714400630e-01, 9.99970982461009794e-01,
    9.99972001624374607e-01, 9.99972986351957971e-01, 9.99973937756158504e-01, 9.99974856915316401e-01,
    9.99975744874682659e-01, 9.99976602647376533e-01, 9.99977431215307133e-01, 9.99978231530076256e-01,
    9.99979004513853353e-01, 9.99979751060230959e-01, 9.99980472035056023e-01, 9.99981168277235155e-01,
    9.99981840599527216e-01, 9.99982489789303375e-01, 9.99983116609296396e-01, 9.99983721798321512e-01,
    9.99984306071986073e-01, 9.99984870123372671e-01, 9.99985414623707491e-01, 9.99985940223007019e-01,
    9.99986447550711977e-01, 9.99986937216301719e-01, 9.99987409809885430e-01, 9.99987865902788653e-01,
    9.99988306048114617e-01, 9.99988730781291024e-01, 9.99989140620605399e-01, 9.99989536067723117e-01,
    9.99989917608189782e-01, 9.99990285711921389e-01, 9.99990640833677280e-01, 9.99990983413528101e-01,
    9.99991313877296450e-01, 9.99991632637000638e-01, 9.99991940091273346e-01, 9.99992236625775854e-01,
    9.99992522613596613e-01, 9.99992798415637818e-01, 9.99993064380997554e-01, 9.99993320847328393e-01,
    9.99993568141200995e-01, 9.99993806578441946e-01, 9.99994036464474823e-01, 9.99994258094640487e-01,
    9.99994471754515946e-01, 9.99994677720222103e-01, 9.99994876258714527e-01, 9.99995067628081213e-01,
    9.99995252077816366e-01, 9.99995429849094397e-01, 9.99995601175033277e-01, 9.99995766280949883e-01,
    9.99995925384611795e-01, 9.99996078696471336e-01, 9.99996226419906931e-01, 9.99996368751444042e-01,
    9.99996505880976549e-01, 9.99996637991980575e-01, 9.99996765261720988e-01, 9.99996887861450801e-01,
    9.99997005956607343e-01, 9.99997119706999005e-01, 9.99997229266986198e-01, 9.99997334785664216e-01,
    9.99997436407027540e-01, 9.99997534270141708e-01, 9.99997628509302516e-01, 9.99997719254190121e-01,
    9.99997806630025132e-01, 9.99997890757710950e-01, 9.99997971753977311e-01, 9.99998049731519068e-01,
    9.99998124799128196e-01, 9.99998197061823690e-01, 9.99998266620975018e-01, 9.99998333574426246e-01,
    9.99998398016611501e-01, 9.99998460038670989e-01, 9.99998519728554913e-01, 9.99998577171138159e-01,
    9.99998632448317437e-01, 9.99998685639115648e-01, 9.99998736819774581e-01, 9.99998786063850620e-01,
    9.99998833442306667e-01, 9.99998879023596965e-01, 9.99998922873753693e-01, 9.99998965056469569e-01,
    9.99999005633176785e-01, 9.99999044663123393e-01, 9.99999082203448464e-01, 9.99999118309254476e-01,
    9.99999153033675370e-01, 9.99999186427946607e-01, 9.99999218541469337e-01, 9.99999249421870906e-01,
    9.99999279115069473e-01, 9.99999307665330850e-01, 9.99999335115328458e-01, 9.99999361506193951e-01,
    9.99999386877574836e-01, 9.99999411267682659e-01, 9.99999434713346402e-01, 9.99999457250057899e-01,
    9.99999478912019457e-01, 9.99999499732188379e-01, 9.99999519742322929e-01, 9.99999538973020630e-01,
    9.99999557453762233e-01, 9.99999575212948577e-01, 9.99999592277940663e-01, 9.99999608675095408e-01,
    9.99999624429801615e-01, 9.99999639566512055e-01, 9.99999654108780889e-01, 9.99999668079291415e-01,
    9.99999681499888937e-01, 9.99999694391611516e-01, 9.99999706774716057e-01, 9.99999718668709958e-01,
    9.99999730092373973e-01, 9.99999741063789971e-01, 9.99999751600368025e-01, 9.99999761718867508e-01,
    9.99999771435420959e-01, 9.99999780765559065e-01, 9.99999789724229871e-01, 9.99999798325820866e-01,
    9.99999806584178974e-01, 9.99999814512630647e-01, 9.99999822124000737e-01, 9.99999829430629816e-01,
    9.99999836444392165e-01, 9.99999843176715419e-01, 9.99999849638591343e-01, 9.99999855840597140e-01,
    9.99999861792908340e-01, 9.99999867505313111e-01, 9.99999872987227478e-01, 9.99999878247708307e-01,
    9.99999883295467074e-01, 9.99999888138882964e-01, 9.99999892786013644e-01, 9.99999897244609470e-01,
    9.99999901522122037e-01, 9.99999905625717833e-01, 9.99999909562286793e-01, 9.99999913338455060e-01,
    9.99999916960592650e-01, 9.99999920434822887e-01, 9.99999923767033283e-01, 9.99999926962883867e-01,
    9.99999930027814621e-01, 9.99999932967054805e-01, 9.99999935785631067e-01, 9.99999938488373208e-01,
    9.99999941079924626e-01, 9.99999943564746641e-01, 9.99999945947126712e-01, 9.99999948231184765e-01,
    9.99999950420878414e-01, 9.99999952520013391e-01, 9.99999954532242663e-01, 9.99999956461076978e-01,
    9.99999958309889969e-01, 9.99999960081920936e-01, 9.99999961780282942e-01, 9.99999963407964931e-01,
    9.99999964967838162e-01, 9.99999966462660983e-01, 9.99999967895080943e-01, 9.99999969267642896e-01,
    9.99999970582788666e-01, 9.99999971842863378e-01, 9.99999973050119340e-01, 9.99999974206719378e-01,
    9.99999975314739498e-01, 9.99999976376172106e-01, 9.99999977392931561e-01, 9.99999978366853837e-01,
    9.99999979299703856e-01, 9.99999980193172600e-01, 9.99999981048884989e-01, 9.99999981868400334e-01,
    9.99999982653215436e-01, 9.99999983404765702e-01, 9.99999984124429142e-01, 9.99999984813528919e-01,
    9.99999985473333464e-01, 9.99999986105060801e-01, 9.99999986709878552e-01, 9.99999987288907599e-01,
    9.99999987843224081e-01, 9.99999988373857729e-01, 9.99999988881798973e-01, 9.99999989367997610e-01,
    9.99999989833362912e-01, 9.99999990278768514e-01, 9.99999990705051855e-01, 9.99999991113016073e-01,
    9.99999991503430996e-01, 9.99999991877036032e-01, 9.99999992234538615e-01, 9.99999992576618535e-01,
    9.99999992903926271e-01, 9.99999993217086547e-01, 9.99999993516697772e-01, 9.99999993803333487e-01,
    9.99999994077543919e-01, 9.99999994339856202e-01, 9.99999994590776042e-01,
};

}  // namespace rissense::detail

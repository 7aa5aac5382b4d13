window.search = Object.assign(window.search, JSON.parse('{"results_options":{"limit_results":30,"teaser_word_count":30},"search_options":{"bool":"OR","expand":true,"fields":{"body":{"boost":1},"breadcrumbs":{"boost":1},"title":{"boost":2}}},"doc_urls":["introduction.html#introduction","tensors.html#tensors-unfoldings-and-the-cp-model","tensors.html#unfoldings","tensors.html#norms-errors-noise","dictionary-model.html#constraining-a-factor-to-a-dictionary","dictionary-model.html#repetition-and-assignment","dictionary-model.html#when-is-the-constrained-model-identifiable","solvers.html#the-solver-family","solvers.html#mpals--project-hard","solvers.html#smpals--anneal-the-projection","solvers.html#flex-mpals--keep-b-flexible","solvers.html#als-fg--relax-the-selection","self-dictionary.html#self-dictionary-unmixing","self-dictionary.html#spa-initialization","self-dictionary.html#greedy-refinement","benchmark.html#the-synthetic-benchmark","benchmark.html#data-generation","benchmark.html#metrics","benchmark.html#grids-seeds-reproducibility","cli.html#command-line-and-file-formats","cli.html#array-files","cli.html#decompose","cli.html#synth","cli.html#unmix","cli.html#spark"],"index":{"fields":["title","body","breadcrumbs"],"pipeline":["trimmer","stopWordFilter","stemmer"],"ref":"id","version":"0.9.5","index":{"body":{"root":{"docs":{},"df":0,"0":{"docs":{"11":{"tf":1.4142135623730951},"16":{"tf":1.0},"19":{"tf":1.0},"5":{"tf":1.4142135623730951}},"df":4,".":{"docs":{},"df":0,".":{"docs":{},"df":0,"2":{"docs":{"11":{"tf":1.0}},"df":1},"3":{"docs":{"14":{"tf":1.0}},"df":1}},"0":{"docs":{"11":{"tf":2.0},"13":{"tf":1.4142135623730951},"18":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":2.0},"6":{"tf":1.4142135623730951}},"df":7,"1":{"docs":{"16":{"tf":1.0},"3":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":3},"4":{"docs":{"10":{"tf":1.0}},"df":1}},"1":{"docs":{"11":{"tf":1.4142135623730951},"14":{"tf":1.0},"5":{"tf":1.0}},"df":3,",":{"docs":{},"df":0,"0":{"docs":{},"df":0,".":{"docs":{},"df":0,"5":{"docs":{},"df":0,",":{"docs":{},"df":0,"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}},"2":{"docs":{"11":{"tf":1.0},"14":{"tf":1.0},"3":{"tf":1.0}},"df":3,"5":{"docs":{"11":{"tf":1.0}},"df":1}},"4":{"docs":{},"df":0,")":{"docs":{},"df":0,"]":{"docs":{},"df":0,"[":{"docs":{},"df":0,"c":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"5":{"docs":{"11":{"tf":1.0},"13":{"tf":1.4142135623730951},"16":{"tf":1.0}},"df":3},"7":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"17":{"tf":1.4142135623730951}},"df":1}}}}},"8":{"docs":{"14":{"tf":1.0}},"df":1},"9":{"docs":{"5":{"tf":1.0}},"df":1,"9":{"docs":{},"df":0,"9":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"1":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"16":{"tf":1.4142135623730951},"17":{"tf":1.4142135623730951},"18":{"tf":1.4142135623730951},"19":{"tf":1.0},"2":{"tf":1.0},"22":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":2.0},"5":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.7320508075688772}},"df":17,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{"8":{"tf":1.0}},"df":1}}},".":{"docs":{},"df":0,".":{"docs":{},"df":0,"=":{"docs":{},"df":0,"3":{"docs":{"2":{"tf":1.0}},"df":1}}},"0":{"docs":{"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"5":{"tf":1.4142135623730951},"6":{"tf":1.7320508075688772},"9":{"tf":1.0}},"df":5},"1":{"docs":{"9":{"tf":1.0}},"df":1},"5":{"docs":{"0":{"tf":1.0},"4":{"tf":1.0},"9":{"tf":1.0}},"df":3}},"/":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"11":{"tf":1.0}},"df":1}}},"0":{"docs":{"14":{"tf":1.0},"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"21":{"tf":1.0},"4":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":6,"0":{"docs":{},"df":0,"0":{"docs":{"16":{"tf":1.0},"7":{"tf":1.0}},"df":2}},"^":{"docs":{},"df":0,"6":{"docs":{"6":{"tf":1.0}},"df":1}}},"1":{"docs":{"16":{"tf":1.4142135623730951},"4":{"tf":1.0},"8":{"tf":1.0}},"df":3,".":{"docs":{},"df":0,"5":{"docs":{"16":{"tf":1.0}},"df":1}}},"2":{"docs":{"16":{"tf":1.0},"17":{"tf":1.7320508075688772},"2":{"tf":1.0},"8":{"tf":1.0}},"df":4},"3":{"docs":{"0":{"tf":1.0},"8":{"tf":1.0}},"df":2},"e":{"docs":{"14":{"tf":1.0},"17":{"tf":1.7320508075688772},"2":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":6,"1":{"docs":{},"df":0,"2":{"docs":{"9":{"tf":1.0}},"df":1}}}},"2":{"docs":{"0":{"tf":2.23606797749979},"11":{"tf":1.7320508075688772},"13":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951},"17":{"tf":1.7320508075688772},"18":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":2.23606797749979},"22":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.7320508075688772},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":15,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{"8":{"tf":1.0}},"df":1}}},".":{"docs":{},"df":0,"0":{"docs":{"17":{"tf":1.0}},"df":1}},"0":{"docs":{"20":{"tf":1.0}},"df":1},"5":{"docs":{"18":{"tf":1.0}},"df":1},"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"z":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"3":{"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.0},"14":{"tf":2.8284271247461903},"16":{"tf":1.0},"17":{"tf":1.7320508075688772},"18":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.7320508075688772},"8":{"tf":1.7320508075688772},"9":{"tf":2.0}},"df":14,".":{"docs":{},"df":0,".":{"docs":{},"df":0,"3":{"docs":{},"df":0,"0":{"docs":{"14":{"tf":1.0}},"df":1}}},"0":{"docs":{"17":{"tf":1.0},"4":{"tf":1.0}},"df":2}},"0":{"docs":{"14":{"tf":1.0},"16":{"tf":1.0}},"df":2}},"4":{"docs":{"0":{"tf":2.0},"11":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.7320508075688772},"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"2":{"tf":1.0},"7":{"tf":1.0}},"df":8,".":{"docs":{},"df":0,"0":{"docs":{"11":{"tf":1.0}},"df":1}},"0":{"docs":{"18":{"tf":1.0}},"df":1},"2":{"docs":{"2":{"tf":1.0},"21":{"tf":1.0}},"df":2}},"5":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"14":{"tf":1.4142135623730951},"16":{"tf":1.0},"17":{"tf":1.7320508075688772},"24":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":2.23606797749979}},"df":9,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"b":{"docs":{"9":{"tf":1.0}},"df":1}}},"0":{"docs":{"14":{"tf":1.0},"16":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0}},"df":4}},"6":{"docs":{"0":{"tf":1.4142135623730951},"14":{"tf":1.0},"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"23":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":6,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"b":{"docs":{"9":{"tf":1.0}},"df":1}}},".":{"docs":{},"df":0,"0":{"docs":{"8":{"tf":1.0}},"df":1}},"0":{"docs":{"16":{"tf":1.0}},"df":1}},"7":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"14":{"tf":1.0},"17":{"tf":2.23606797749979},"18":{"tf":1.0},"20":{"tf":1.0},"3":{"tf":1.4142135623730951},"4":{"tf":1.7320508075688772}},"df":8,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{"0":{"tf":1.0}},"df":1},"b":{"docs":{},"df":0,".":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}},".":{"docs":{},"df":0,".":{"docs":{},"df":0,"1":{"docs":{},"df":0,"3":{"docs":{"22":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"z":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"8":{"docs":{"0":{"tf":1.4142135623730951},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.7320508075688772}},"df":6,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0}},"df":1}}}},"9":{"docs":{"17":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":2},"_":{"docs":{"3":{"tf":1.0}},"df":1,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"x":{"docs":{},"df":0,"(":{"docs":{},"df":0,"a":{"docs":{},"df":0,"ᵀ":{"docs":{},"df":0,"a":{"docs":{"11":{"tf":1.0}},"df":1}}},"d":{"docs":{},"df":0,"ᵀ":{"docs":{},"df":0,"d":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}},"a":{"docs":{},"df":0,".":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0}},"df":1}}}},"[":{"docs":{},"df":0,"k":{"docs":{"1":{"tf":1.0}},"df":1}},"_":{"docs":{},"df":0,"i":{"docs":{"14":{"tf":1.0}},"df":1}},"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{"0":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0},"4":{"tf":1.0}},"df":2}}},"r":{"docs":{},"df":0,"b":{"docs":{"1":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"14":{"tf":1.7320508075688772},"23":{"tf":1.0}},"df":3}}}},"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{"17":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{"7":{"tf":1.0}},"df":1}}}},"d":{"docs":{},"df":0,"d":{"docs":{"16":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"3":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0}},"df":1}}}}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0}},"df":1}}}},"f":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}},"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"3":{"tf":1.4142135623730951}},"df":1,"s":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"18":{"tf":1.7320508075688772},"7":{"tf":1.0}},"df":3}}}}},"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{"18":{"tf":1.4142135623730951}},"df":1,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}}}}}},"l":{"docs":{"11":{"tf":1.0},"18":{"tf":1.0},"21":{"tf":1.7320508075688772}},"df":3,"g":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"m":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"14":{"tf":1.4142135623730951},"5":{"tf":1.0}},"df":2,"(":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":14}}}}}}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"2":{"tf":1.0}},"df":1}}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"11":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"9":{"tf":1.0}},"df":4}}}},"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{"0":{"tf":1.0},"4":{"tf":1.0}},"df":2}}}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"1":{"tf":1.0},"20":{"tf":1.0}},"df":2}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0},"22":{"tf":1.0}},"df":2}}}}}}},"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"(":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"0":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"x":{"docs":{"2":{"tf":1.0}},"df":1}},"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"x":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"(":{"docs":{},"df":0,"j":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"j":{"docs":{},"df":0,".":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"9":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}}}},"m":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"b":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}},"s":{"docs":{},"df":0,"n":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"b":{"docs":{"3":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"11":{"tf":1.0}},"df":1}}}}}},"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"q":{"docs":{},"df":0,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"b":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}},"g":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0}},"df":2}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"y":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"x":{"docs":{"5":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{"3":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"u":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}},"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}},"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"h":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{"13":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"k":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"d":{"docs":{"6":{"tf":1.0}},"df":1},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"3":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"n":{"docs":{"14":{"tf":1.0},"5":{"tf":1.4142135623730951}},"df":2}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":2.6457513110645907},"1":{"tf":1.0},"10":{"tf":2.0},"11":{"tf":1.7320508075688772},"12":{"tf":1.0},"15":{"tf":1.4142135623730951},"16":{"tf":2.449489742783178},"17":{"tf":1.7320508075688772},"18":{"tf":1.0},"21":{"tf":1.0},"4":{"tf":3.0},"5":{"tf":1.7320508075688772},"6":{"tf":1.4142135623730951},"8":{"tf":2.0},"9":{"tf":1.4142135623730951}},"df":15,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,",":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}}}}}}},"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"8":{"tf":1.0}},"df":3}}}}}}}}}}}}}}}}}},"u":{"docs":{},"df":0,"g":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"14":{"tf":1.0},"22":{"tf":1.0}},"df":2}}}},"x":{"docs":{"11":{"tf":1.0}},"df":1},"ᵀ":{"docs":{},"df":0,"a":{"docs":{"7":{"tf":1.0},"9":{"tf":1.0}},"df":2}}},"b":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.7320508075688772},"10":{"tf":2.449489742783178},"14":{"tf":1.0},"17":{"tf":1.7320508075688772},"2":{"tf":2.0},"4":{"tf":1.7320508075688772},"5":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951},"9":{"tf":2.6457513110645907}},"df":11,"\'":{"docs":{"4":{"tf":1.0}},"df":1},".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}},"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0}},"df":1}}},"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{"17":{"tf":1.0}},"df":1}}}}}},"[":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0}},"df":1}},"_":{"docs":{},"df":0,"i":{"docs":{"4":{"tf":1.0}},"df":1},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"9":{"tf":1.4142135623730951}},"df":1,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}},".":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"12":{"tf":1.0},"14":{"tf":1.0}},"df":2}},"s":{"docs":{},"df":0,"e":{"docs":{"14":{"tf":1.0},"20":{"tf":1.0}},"df":2,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"18":{"tf":1.4142135623730951}},"df":1}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0},"18":{"tf":1.0}},"df":2}}}},"i":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.4142135623730951}},"df":1}}},"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"14":{"tf":1.0}},"df":1}}}},"e":{"docs":{"5":{"tf":1.0}},"df":1,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"10":{"tf":1.0}},"df":1}}},"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"14":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"7":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"22":{"tf":1.0}},"df":1,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.0},"11":{"tf":1.0},"22":{"tf":1.0},"3":{"tf":1.0}},"df":5}}}},"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"v":{"docs":{"18":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{"18":{"tf":1.0}},"df":1}},"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0},"17":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0}},"df":4}},"t":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"17":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0}},"df":1,"i":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"19":{"tf":1.0},"4":{"tf":1.0}},"df":5}}}},"t":{"docs":{"0":{"tf":1.4142135623730951},"3":{"tf":1.0}},"df":2}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"10":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0},"22":{"tf":1.0}},"df":2}}},"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"d":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"18":{"tf":1.0},"24":{"tf":1.0},"6":{"tf":1.0}},"df":4}}}},"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"19":{"tf":1.0}},"df":2}}},"m":{"docs":{},"df":0,"p":{"docs":{"16":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"l":{"docs":{"22":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"n":{"docs":{"6":{"tf":1.0}},"df":1}},"y":{"docs":{"0":{"tf":1.0}},"df":1}},"y":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"22":{"tf":1.4142135623730951}},"df":1}}},"‖":{"docs":{},"df":0,"²":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{"9":{"tf":1.0}},"df":1}}}}},"c":{"docs":{"1":{"tf":1.7320508075688772},"10":{"tf":1.4142135623730951},"11":{"tf":1.7320508075688772},"16":{"tf":2.23606797749979},"2":{"tf":1.7320508075688772},"4":{"tf":1.0},"7":{"tf":1.4142135623730951},"9":{"tf":1.7320508075688772}},"df":8,"(":{"docs":{},"df":0,"d":{"docs":{"6":{"tf":1.0}},"df":1}},")":{"docs":{},"df":0,"^":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}}},".":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0}},"df":1}}}},"[":{"docs":{},"df":0,"m":{"docs":{"1":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"4":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0}},"df":1}}},"p":{"docs":{"11":{"tf":1.4142135623730951},"14":{"tf":1.0}},"df":2},"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"o":{"docs":{"0":{"tf":1.0}},"df":1}},"l":{"docs":{},"df":0,"o":{"docs":{"0":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"i":{"docs":{"14":{"tf":1.0},"20":{"tf":1.0},"4":{"tf":1.0}},"df":3}}}},"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"18":{"tf":1.7320508075688772}},"df":1}}},"f":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951}},"df":3}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"4":{"tf":1.0},"7":{"tf":1.0}},"df":2}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"16":{"tf":1.0},"6":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{},"df":0,"i":{"docs":{"7":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"s":{"docs":{"5":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"2":{"tf":1.0},"4":{"tf":1.0}},"df":2}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{"11":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"s":{"docs":{"16":{"tf":2.6457513110645907},"18":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"p":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.0}},"df":1}}}}},"i":{"docs":{"14":{"tf":1.0},"18":{"tf":1.0}},"df":2},"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"22":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}}},"o":{"docs":{"17":{"tf":1.0}},"df":1,"d":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"19":{"tf":1.0}},"df":2}},"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"s":{"docs":{"16":{"tf":1.0},"9":{"tf":1.0}},"df":2}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0}},"df":2}}}},"s":{"docs":{"5":{"tf":1.4142135623730951}},"df":1}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"11":{"tf":2.449489742783178},"12":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"2":{"tf":1.7320508075688772},"24":{"tf":1.0},"4":{"tf":2.23606797749979},"5":{"tf":2.0},"6":{"tf":1.7320508075688772},"8":{"tf":1.0}},"df":12,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}},"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"19":{"tf":1.0},"23":{"tf":1.0}},"df":3}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"4":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"14":{"tf":1.0},"23":{"tf":1.0}},"df":2}}}}}},"e":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0}},"df":1}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}},"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"4":{"tf":1.4142135623730951}},"df":3}},"u":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0},"23":{"tf":1.0}},"df":2}}}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}},"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.4142135623730951},"18":{"tf":1.0},"6":{"tf":1.0}},"df":5}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{"19":{"tf":1.0},"21":{"tf":1.0}},"df":2}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"4":{"tf":1.0}},"df":3,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{"0":{"tf":1.0},"11":{"tf":1.4142135623730951}},"df":2}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"16":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0},"2":{"tf":1.0}},"df":2}},"r":{"docs":{},"df":0,"g":{"docs":{"10":{"tf":1.0},"21":{"tf":1.0}},"df":2}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0},"14":{"tf":1.0}},"df":2}}}}},"p":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.0},"17":{"tf":1.0},"4":{"tf":1.4142135623730951}},"df":3}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}},"l":{"docs":{"15":{"tf":1.0},"16":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":3}}}},"s":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"12":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":4,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"s":{"docs":{},"df":0,"v":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0}},"df":4}},"p":{"docs":{},"df":0,"l":{"docs":{"9":{"tf":1.0}},"df":1}}}},"p":{"docs":{"1":{"tf":1.0},"4":{"tf":1.0}},"df":2,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"f":{"docs":{"2":{"tf":1.0}},"df":1},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"(":{"docs":{},"df":0,"(":{"docs":{},"df":0,"4":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.4142135623730951},"2":{"tf":1.0},"4":{"tf":1.0}},"df":3,"’":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"s":{"docs":{},"df":0,"v":{"docs":{"18":{"tf":1.0},"20":{"tf":1.4142135623730951}},"df":2,"/":{"docs":{},"df":0,"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"/":{"docs":{},"df":0,"g":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1}}}}},"t":{"docs":{"14":{"tf":1.0}},"df":1}},"ᵀ":{"docs":{},"df":0,"c":{"docs":{"11":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":3}}},"d":{"docs":{"14":{"tf":1.4142135623730951},"16":{"tf":1.0},"23":{"tf":1.0},"4":{"tf":1.7320508075688772},"6":{"tf":1.4142135623730951}},"df":5,".":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0},"24":{"tf":1.0}},"df":2}}}},"_":{"docs":{},"df":0,"j":{"docs":{"4":{"tf":1.4142135623730951}},"df":1}},"a":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0}},"df":1,"a":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.7320508075688772},"15":{"tf":1.0}},"df":5,"’":{"docs":{"0":{"tf":1.0}},"df":1}}}},"b":{"docs":{"16":{"tf":1.0},"3":{"tf":1.0}},"df":2},"c":{"docs":{},"df":0,"p":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.4142135623730951},"19":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0}},"df":6,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.0}},"df":1},"y":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{"0":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}}}}},"{":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":14}}}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"17":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0}},"df":7,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"6":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"!":{"docs":{},"df":0,"[":{"docs":{},"df":0,"1":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"f":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"c":{"docs":{},"df":0,"p":{"docs":{},"df":0,"d":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}},"p":{"docs":{},"df":0,"a":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"2":{"tf":1.0},"3":{"tf":1.0},"9":{"tf":1.0}},"df":3}}}}}}}}}}},"s":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"_":{"docs":{},"df":0,"u":{"docs":{},"df":0,"p":{"docs":{},"df":0,"d":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}}},"{":{"docs":{},"df":0,"f":{"docs":{},"df":0,"g":{"docs":{},"df":0,"_":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}}},"y":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"c":{"docs":{},"df":0,"p":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"3":{"tf":1.0},"8":{"tf":1.0}},"df":3}}}}}}}}}}}}}}},"{":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"c":{"docs":{},"df":0,"p":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}},"{":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}}}}},"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.4142135623730951},"21":{"tf":1.0}},"df":2,"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"15":{"tf":1.0},"18":{"tf":1.0}},"df":3}}}}}}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.7320508075688772},"19":{"tf":1.4142135623730951},"5":{"tf":1.0},"7":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":7,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"8":{"tf":1.0}},"df":5}}}}}}}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"21":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"x":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}},"n":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"11":{"tf":1.0}},"df":3}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"24":{"tf":1.0},"6":{"tf":1.4142135623730951}},"df":3}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{"18":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"9":{"tf":1.0}},"df":1},"t":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0},"6":{"tf":1.0}},"df":2,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"19":{"tf":1.0}},"df":2}}}}}}}}}},"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"n":{"docs":{"7":{"tf":1.0}},"df":1}}}},"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.7320508075688772},"11":{"tf":1.0},"16":{"tf":1.4142135623730951},"21":{"tf":1.0},"4":{"tf":2.0},"5":{"tf":1.7320508075688772},"8":{"tf":1.7320508075688772}},"df":7,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{"4":{"tf":1.0}},"df":1},"i":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}}}},"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.4142135623730951},"20":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.4142135623730951},"6":{"tf":1.0},"7":{"tf":1.0}},"df":12},"y":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"11":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}},"e":{"docs":{"11":{"tf":1.0}},"df":1},"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0}},"df":1}}}},"m":{"docs":{"16":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0}},"df":3},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"23":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0},"16":{"tf":1.0},"5":{"tf":1.0}},"df":3}}}}}}},"o":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0}},"df":1,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"w":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"p":{"docs":{"23":{"tf":1.0},"7":{"tf":1.0}},"df":2}}},"s":{"docs":{"11":{"tf":1.0},"9":{"tf":1.7320508075688772}},"df":2,"‖":{"docs":{},"df":0,"²":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{"10":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}},"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{"20":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"16":{"tf":1.4142135623730951}},"df":1}}}},"r":{"docs":{},"df":0,"e":{"docs":{"18":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"g":{"docs":{"14":{"tf":1.0}},"df":1}},"1":{"docs":{"6":{"tf":1.0}},"df":1,"+":{"docs":{},"df":0,"e":{"docs":{},"df":0,"2":{"docs":{"6":{"tf":1.0}},"df":1}}}},"2":{"docs":{"6":{"tf":1.0}},"df":1},"_":{"docs":{},"df":0,"i":{"docs":{"7":{"tf":1.4142135623730951}},"df":1},"{":{"docs":{},"df":0,"i":{"docs":{"7":{"tf":1.0}},"df":1}}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"11":{"tf":1.4142135623730951},"16":{"tf":1.7320508075688772},"18":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}},"df":7}},"s":{"docs":{},"df":0,"i":{"docs":{"15":{"tf":1.0}},"df":1}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.4142135623730951}},"df":1,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"20":{"tf":1.0}},"df":1}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{"12":{"tf":1.0},"14":{"tf":1.7320508075688772},"23":{"tf":1.0}},"df":3}}}}},"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{"5":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{"6":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0},"11":{"tf":1.7320508075688772},"16":{"tf":1.0},"2":{"tf":1.4142135623730951}},"df":4}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"6":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"19":{"tf":1.0}},"df":1}}}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"2":{"tf":1.0}},"df":3},"t":{"docs":{"7":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"14":{"tf":2.0},"17":{"tf":1.7320508075688772},"18":{"tf":1.0},"19":{"tf":1.4142135623730951},"21":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"3":{"tf":1.0},"6":{"tf":1.0}},"df":10}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"11":{"tf":1.0}},"df":1}}},"t":{"docs":{"17":{"tf":1.4142135623730951}},"df":1,"i":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"7":{"tf":1.0}},"df":6}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0}},"df":2},"r":{"docs":{},"df":0,"y":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"h":{"docs":{"18":{"tf":1.0},"2":{"tf":1.0}},"df":2}}}}}},"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"14":{"tf":1.7320508075688772},"16":{"tf":1.0},"17":{"tf":1.0}},"df":5,"l":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0},"13":{"tf":1.0},"2":{"tf":1.4142135623730951},"4":{"tf":1.0},"9":{"tf":1.0}},"df":5}}}}},"c":{"docs":{},"df":0,"e":{"docs":{"11":{"tf":1.0},"16":{"tf":1.0},"24":{"tf":1.4142135623730951}},"df":3},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"8":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"d":{"docs":{"14":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}},"t":{"docs":{"19":{"tf":1.0}},"df":1}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"s":{"docs":{"17":{"tf":1.0},"19":{"tf":1.0}},"df":2}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{"20":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0},"23":{"tf":1.0}},"df":2}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}},"f":{"docs":{"2":{"tf":1.0}},"df":1,".":{"docs":{},"df":0,"b":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"k":{"docs":{},"df":0,"r":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"c":{"docs":{"2":{"tf":1.0}},"df":1}},"6":{"docs":{},"df":0,"4":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"11":{"tf":1.4142135623730951},"14":{"tf":2.23606797749979},"17":{"tf":1.0},"20":{"tf":1.4142135623730951},"4":{"tf":1.0},"8":{"tf":1.0}},"df":8}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":2.23606797749979},"1":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.4142135623730951},"18":{"tf":1.0},"4":{"tf":1.7320508075688772},"7":{"tf":1.0},"8":{"tf":1.0}},"df":8,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}},"i":{"docs":{},"df":0,"l":{"docs":{"18":{"tf":1.0}},"df":1,"u":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0},"19":{"tf":1.0}},"df":2}}}},"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"7":{"tf":1.0}},"df":1}}}}},"s":{"docs":{"4":{"tf":1.4142135623730951},"5":{"tf":1.7320508075688772}},"df":2}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0}},"df":2}}}},"r":{"docs":{"17":{"tf":1.0}},"df":1},"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0}},"df":2}},"v":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"g":{"docs":{"11":{"tf":1.0},"21":{"tf":1.4142135623730951}},"df":2,"_":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"11":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"&":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"e":{"docs":{"14":{"tf":1.4142135623730951},"19":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.4142135623730951}},"df":4,".":{"docs":{},"df":0,"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"9":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}},"t":{"docs":{"0":{"tf":1.0},"4":{"tf":1.0}},"df":2},"v":{"docs":{},"df":0,"e":{"docs":{"18":{"tf":1.0}},"df":1}},"x":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"2":{"tf":1.0},"22":{"tf":1.0},"8":{"tf":1.0}},"df":5}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"18":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.4142135623730951}},"df":3}},"e":{"docs":{},"df":0,"x":{"docs":{"21":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0}},"df":2}}}}},"i":{"docs":{},"df":0,"p":{"docs":{"17":{"tf":1.7320508075688772},"4":{"tf":1.0}},"df":2,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"17":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"n":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":14},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.0}},"df":1},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"15":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.4142135623730951},"17":{"tf":1.0}},"df":2}},"u":{"docs":{},"df":0,"r":{"docs":{"19":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"17":{"tf":1.4142135623730951}},"df":1}}}}}},"e":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"14":{"tf":1.0},"4":{"tf":1.4142135623730951}},"df":4,"l":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.0},"8":{"tf":1.0}},"df":2}},"z":{"docs":{"9":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"5":{"tf":1.0}},"df":1,"i":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"g":{"docs":{"11":{"tf":1.7320508075688772}},"df":1,"a":{"docs":{},"df":0,"p":{"docs":{"15":{"tf":1.0}},"df":1},"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0},"3":{"tf":1.0}},"df":2}}}}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0}},"df":1,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0},"6":{"tf":1.0}},"df":2}},"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0}},"df":1}}}}}},"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0},"22":{"tf":1.0}},"df":2}}}}}},"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0}},"df":2}}}}}}}}}}}},"p":{"docs":{"18":{"tf":1.0}},"df":1},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"11":{"tf":1.4142135623730951},"2":{"tf":1.0}},"df":3}}}},"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"11":{"tf":1.0}},"df":1}}}},"m":{"docs":{"11":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}},"df":3}},"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"5":{"tf":1.0}},"df":3}}}},"i":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0}},"df":5,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,",":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,",":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,",":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,",":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,",":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,",":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,",":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"17":{"tf":1.0}},"df":1}},"p":{"docs":{"0":{"tf":1.0}},"df":1}},"w":{"docs":{"9":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"8":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0}},"df":1}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1}}}},"r":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0}},"df":2,"d":{"docs":{"11":{"tf":1.0},"15":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":3}}},"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0},"20":{"tf":1.0}},"df":2}}}},"r":{"docs":{},"df":0,"e":{"docs":{"14":{"tf":1.0},"6":{"tf":1.0}},"df":2}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"15":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"2":{"tf":1.0},"20":{"tf":1.0}},"df":2}},"p":{"docs":{"11":{"tf":1.0},"8":{"tf":1.0}},"df":2},"u":{"docs":{},"df":0,"r":{"docs":{"6":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"i":{"docs":{"13":{"tf":1.0},"14":{"tf":1.0}},"df":2,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{"13":{"tf":1.0},"14":{"tf":1.0}},"df":2,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"m":{"docs":{"13":{"tf":1.0}},"df":1},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"y":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"20":{"tf":1.0}},"df":3}}}}}}}}}}},"i":{"docs":{},"df":0,".":{"docs":{"17":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{"16":{"tf":1.4142135623730951},"3":{"tf":1.0}},"df":2}}}},"/":{"docs":{},"df":0,"o":{"docs":{"19":{"tf":1.0}},"df":1}},"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"‖":{"docs":{},"df":0,"²":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0}},"df":2}}}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0},"2":{"tf":1.4142135623730951},"22":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0}},"df":6,"i":{"docs":{},"df":0,"f":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.7320508075688772}},"df":4,"i":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0},"5":{"tf":1.0}},"df":4}}}}}},"x":{"docs":{"5":{"tf":1.0}},"df":1,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}},"l":{"docs":{},"df":0,"l":{"docs":{"15":{"tf":1.0}},"df":1}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"14":{"tf":1.0},"20":{"tf":1.0}},"df":2}}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"5":{"tf":1.0},"6":{"tf":1.4142135623730951}},"df":2}}}},"x":{"docs":{"14":{"tf":1.0},"17":{"tf":1.0},"2":{"tf":1.0},"4":{"tf":1.0}},"df":4}},"i":{"docs":{},"df":0,"c":{"docs":{"17":{"tf":1.4142135623730951},"20":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.4142135623730951},"5":{"tf":1.0}},"df":5}}},"i":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.4142135623730951},"18":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.4142135623730951}},"df":4,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"(":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"9":{"tf":1.7320508075688772}},"df":1},"3":{"docs":{"2":{"tf":1.0}},"df":1},"5":{"docs":{"0":{"tf":1.4142135623730951}},"df":1},"6":{"docs":{"8":{"tf":1.4142135623730951}},"df":1}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"i":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"14":{"tf":1.7320508075688772},"18":{"tf":2.0},"23":{"tf":1.4142135623730951}},"df":5},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"18":{"tf":1.0}},"df":1},"y":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0},"21":{"tf":1.0},"4":{"tf":1.0}},"df":3}}},"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.0}},"df":3}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"15":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"20":{"tf":1.0},"24":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0}},"df":6}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"17":{"tf":1.0},"4":{"tf":1.0}},"df":2}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"11":{"tf":1.0}},"df":1},"t":{"docs":{"0":{"tf":1.0},"2":{"tf":1.0}},"df":2}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":2.0},"12":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":1.0},"21":{"tf":1.7320508075688772},"7":{"tf":1.0},"8":{"tf":1.0}},"df":7}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0}},"df":2}}}}}},"j":{"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":2.23606797749979},"14":{"tf":1.4142135623730951},"17":{"tf":1.4142135623730951},"2":{"tf":1.0},"4":{"tf":2.0},"8":{"tf":1.4142135623730951}},"df":7,"o":{"docs":{},"df":0,"b":{"docs":{"22":{"tf":1.7320508075688772}},"df":1}},"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.0}},"df":3}}}},"k":{"docs":{"1":{"tf":1.7320508075688772},"2":{"tf":1.0},"6":{"tf":1.0}},"df":3,"*":{"docs":{},"df":0,"l":{"docs":{"2":{"tf":1.4142135623730951}},"df":1,"*":{"docs":{},"df":0,"m":{"docs":{"1":{"tf":1.0}},"df":1}}},"m":{"docs":{"2":{"tf":1.4142135623730951}},"df":1}},"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"11":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":2}},"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0}},"df":1}}}},"y":{"docs":{"20":{"tf":1.0},"21":{"tf":1.0}},"df":2}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"2":{"tf":1.4142135623730951}},"df":2,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"o":{"docs":{"2":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"f":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"x":{"docs":{"24":{"tf":1.4142135623730951}},"df":1}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{"21":{"tf":1.0}},"df":1},"w":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.4142135623730951}},"df":1}}}},"r":{"docs":{"2":{"tf":2.6457513110645907},"7":{"tf":1.0},"9":{"tf":1.0}},"df":3,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}},"l":{"docs":{"1":{"tf":2.0},"12":{"tf":1.0},"2":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":4,"*":{"docs":{},"df":0,"m":{"docs":{"1":{"tf":1.0},"2":{"tf":1.4142135623730951}},"df":2}},"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"16":{"tf":1.0}},"df":1,"s":{"docs":{},"df":0,"[":{"docs":{},"df":0,"i":{"docs":{},"df":0,"]":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{"21":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}},"r":{"docs":{},"df":0,"g":{"docs":{"15":{"tf":1.0},"9":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1},"s":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"13":{"tf":1.0}},"df":2}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0}},"df":1}}},"y":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.0}},"df":1},"v":{"docs":{"16":{"tf":1.0}},"df":1}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"24":{"tf":1.7320508075688772},"6":{"tf":1.7320508075688772}},"df":2}}}},"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"9":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"20":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0}},"df":1,"l":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"6":{"tf":1.0}},"df":3}}}}}},"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"l":{"docs":{"20":{"tf":1.0}},"df":1}}},"v":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{"16":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"p":{"docs":{"14":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0}},"df":1}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0}},"df":1}}}}},"m":{"docs":{"0":{"tf":1.0},"1":{"tf":2.23606797749979},"12":{"tf":2.23606797749979},"13":{"tf":1.0},"2":{"tf":1.7320508075688772},"6":{"tf":1.0}},"df":6,"_":{"docs":{},"df":0,"i":{"docs":{"14":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":14}},"j":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0},"20":{"tf":1.4142135623730951}},"df":2}}},"k":{"docs":{},"df":0,"e":{"docs":{"11":{"tf":1.0},"14":{"tf":1.0}},"df":2}},"n":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.0},"18":{"tf":1.0}},"df":2}},"p":{"docs":{"14":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.0}},"df":3},"r":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0},"23":{"tf":1.0}},"df":2}}}},"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.4142135623730951},"17":{"tf":2.0},"4":{"tf":1.0}},"df":3,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"b":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.4142135623730951},"6":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":6},"x":{"docs":{"0":{"tf":2.0},"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.0},"2":{"tf":1.0},"24":{"tf":1.0},"4":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.0}},"df":10,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"5":{"docs":{"11":{"tf":1.0}},"df":1},"6":{"docs":{"14":{"tf":1.0},"17":{"tf":1.0},"4":{"tf":1.4142135623730951}},"df":3},"7":{"docs":{"11":{"tf":1.0}},"df":1},"8":{"docs":{"8":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{"5":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":2},"3":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}},"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"3":{"docs":{},"df":0,"0":{"docs":{"14":{"tf":1.0}},"df":1}},"7":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0}},"df":1}}}},"x":{"docs":{"21":{"tf":1.4142135623730951}},"df":1,"(":{"docs":{},"df":0,"r":{"docs":{"17":{"tf":1.4142135623730951}},"df":1}},"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.4142135623730951}},"df":1}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}}}}}}},"i":{"docs":{},"df":0,"m":{"docs":{"17":{"tf":1.0},"5":{"tf":1.0}},"df":2,"u":{"docs":{},"df":0,"m":{"docs":{"17":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.7320508075688772}},"df":1},"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"22":{"tf":1.0}},"df":2}}}},"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{"5":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"24":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"(":{"docs":{},"df":0,"r":{"docs":{"17":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"m":{"docs":{"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"17":{"tf":1.0}},"df":3}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"17":{"tf":1.0}},"df":1}}}}},"s":{"docs":{"17":{"tf":1.4142135623730951}},"df":1}},"x":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"13":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"2":{"tf":2.449489742783178},"5":{"tf":1.0},"6":{"tf":1.0}},"df":3,"l":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"12":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"4":{"tf":1.7320508075688772}},"df":6},"r":{"docs":{"15":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"9":{"tf":1.0}},"df":1}}}},"t":{"docs":{"0":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"e":{"docs":{"14":{"tf":1.0},"18":{"tf":1.0}},"df":2}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.4142135623730951},"14":{"tf":1.0},"18":{"tf":1.0},"21":{"tf":1.7320508075688772},"23":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":6,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}},"’":{"docs":{"11":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0}},"df":1,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"9":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.7320508075688772},"14":{"tf":1.4142135623730951},"16":{"tf":1.0},"17":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0}},"df":7}}},"n":{"docs":{"12":{"tf":1.0},"18":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0}},"df":1,"l":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0}},"df":1}}}},"g":{"docs":{"4":{"tf":1.4142135623730951}},"df":1},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{"11":{"tf":1.0}},"df":1}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.7320508075688772}},"df":4}}},"x":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0}},"df":1,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}},"n":{"docs":{},"df":0,"l":{"docs":{"14":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":2}},"o":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}},"i":{"docs":{},"df":0,"s":{"docs":{"13":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"3":{"tf":1.7320508075688772}},"df":5,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"18":{"tf":1.0}},"df":1}}}}},"i":{"docs":{"3":{"tf":1.4142135623730951}},"df":1}}},"n":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0}},"df":7},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.0},"21":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.4142135623730951}},"df":6}}}},"r":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0}},"df":4,"a":{"docs":{},"df":0,"l":{"docs":{"16":{"tf":1.7320508075688772},"17":{"tf":1.0},"21":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}},"df":5,"i":{"docs":{},"df":0,"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"4":{"tf":1.0}},"df":1,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"y":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{"4":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"p":{"docs":{"6":{"tf":1.0}},"df":1},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"19":{"tf":1.0},"20":{"tf":1.0}},"df":2,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"n":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"x":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"9":{"tf":1.0}},"df":1},"n":{"docs":{},"df":0,"·":{"docs":{},"df":0,"l":{"docs":{},"df":0,"·":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0}},"df":1}}}}}},"b":{"docs":{},"df":0,"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.4142135623730951}},"df":1}}}}},"k":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":14},"n":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.7320508075688772},"16":{"tf":1.7320508075688772},"18":{"tf":1.4142135623730951},"2":{"tf":1.0},"20":{"tf":1.0},"4":{"tf":2.23606797749979},"7":{"tf":1.0}},"df":10,"c":{"docs":{"11":{"tf":1.0}},"df":1},"t":{"docs":{},"df":0,"o":{"docs":{"13":{"tf":1.0},"4":{"tf":1.0},"9":{"tf":1.0}},"df":3}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"15":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"19":{"tf":1.0},"20":{"tf":1.4142135623730951}},"df":2}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"17":{"tf":1.0}},"df":1}}}},"r":{"docs":{"17":{"tf":1.4142135623730951}},"df":1}}}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.4142135623730951},"2":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951}},"df":3}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"2":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}},"u":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"8":{"tf":1.0}},"df":5,"e":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":2}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"11":{"tf":1.0}},"df":1}}}}}},"u":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"21":{"tf":1.0}},"df":2}}}}}},"p":{"docs":{"0":{"tf":1.7320508075688772},"14":{"tf":2.0},"21":{"tf":1.0},"9":{"tf":1.0}},"df":4,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0},"6":{"tf":1.0}},"df":2}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"22":{"tf":1.0}},"df":1}}}}},"t":{"docs":{"0":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{"18":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,"s":{"docs":{"14":{"tf":1.0},"22":{"tf":1.0}},"df":2},"t":{"docs":{"6":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"h":{"docs":{"5":{"tf":1.0}},"df":1,">":{"docs":{},"df":0,".":{"docs":{},"df":0,"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"20":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"s":{"docs":{},"df":0,"v":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.4142135623730951},"12":{"tf":1.0},"14":{"tf":1.4142135623730951},"16":{"tf":1.0},"17":{"tf":1.4142135623730951},"18":{"tf":2.0},"20":{"tf":1.0},"24":{"tf":1.0},"4":{"tf":1.4142135623730951},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":12,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"17":{"tf":1.4142135623730951},"2":{"tf":1.0},"6":{"tf":1.0}},"df":3}}},"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"b":{"docs":{"3":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"13":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"22":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0}},"df":6}},"n":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0}},"df":2},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"14":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}},"df":3}}}}},"x":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"12":{"tf":2.23606797749979},"13":{"tf":1.0},"14":{"tf":2.449489742783178},"23":{"tf":1.4142135623730951}},"df":5}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"20":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1}},"u":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":1.0}},"df":3}},"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0},"22":{"tf":1.0},"8":{"tf":1.0}},"df":3}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{"14":{"tf":1.0}},"df":1}}},"y":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"16":{"tf":1.0}},"df":2}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{"19":{"tf":1.0}},"df":1}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{"14":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"v":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{"10":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0}},"df":3}}},"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}},"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"22":{"tf":1.0},"3":{"tf":1.0}},"df":2,"t":{"docs":{"0":{"tf":1.0},"2":{"tf":1.7320508075688772},"4":{"tf":1.0}},"df":3}}}},"j":{"docs":{"4":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.4142135623730951},"13":{"tf":1.4142135623730951},"15":{"tf":1.0},"18":{"tf":1.0},"21":{"tf":1.0},"4":{"tf":1.7320508075688772},"8":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":8,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}}}}}},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"18":{"tf":1.0}},"df":1}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"17":{"tf":1.0}},"df":1}}}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951},"23":{"tf":1.0}},"df":5},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{"15":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"h":{"docs":{"11":{"tf":1.0}},"df":1}}}},"r":{"docs":{"0":{"tf":1.0},"1":{"tf":2.8284271247461903},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":2.23606797749979},"16":{"tf":1.4142135623730951},"18":{"tf":1.0},"2":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951}},"df":11,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{"11":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0},"16":{"tf":1.4142135623730951}},"df":2,"l":{"docs":{},"df":0,"i":{"docs":{"18":{"tf":1.0}},"df":1}}}}},"k":{"docs":{"0":{"tf":2.0},"1":{"tf":1.4142135623730951},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"18":{"tf":1.4142135623730951},"21":{"tf":1.0},"23":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0}},"df":11}},"o":{"docs":{"0":{"tf":1.0},"2":{"tf":1.4142135623730951}},"df":2},"r":{"docs":{},"df":0,"e":{"docs":{"11":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"e":{"docs":{"17":{"tf":1.0},"18":{"tf":1.7320508075688772}},"df":2},"i":{"docs":{},"df":0,"o":{"docs":{"3":{"tf":1.0}},"df":1}}},"w":{"docs":{"20":{"tf":1.0},"4":{"tf":1.0}},"df":2}},"e":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"14":{"tf":1.0},"17":{"tf":1.7320508075688772},"18":{"tf":1.7320508075688772},"22":{"tf":1.0}},"df":6,"_":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"18":{"tf":1.0}},"df":1}}}}},"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{"18":{"tf":1.0}},"df":1}},"l":{"docs":{"14":{"tf":1.0},"22":{"tf":1.0}},"df":2,"i":{"docs":{},"df":0,"z":{"docs":{"16":{"tf":1.0},"18":{"tf":1.0},"3":{"tf":1.0}},"df":3}}}},"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"n":{"docs":{"8":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"14":{"tf":1.7320508075688772},"17":{"tf":1.0},"18":{"tf":1.0},"23":{"tf":1.0},"3":{"tf":1.0}},"df":7}}}}}}},"r":{"docs":{},"df":0,"d":{"docs":{"17":{"tf":1.0},"4":{"tf":1.4142135623730951}},"df":2}},"v":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0}},"df":2}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}},"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"12":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0},"14":{"tf":1.0},"23":{"tf":1.0}},"df":3}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"2":{"tf":1.4142135623730951}},"df":1}}},"u":{"docs":{},"df":0,"s":{"docs":{"24":{"tf":1.0},"6":{"tf":1.0}},"df":2}}},"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0}},"df":2}}},"l":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"17":{"tf":1.0},"21":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":7,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.4142135623730951}},"df":1}}}}}}}}},"a":{"docs":{},"df":0,"x":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0}},"df":2}},"i":{"docs":{"2":{"tf":1.0}},"df":1}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"9":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"v":{"docs":{"0":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"11":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"13":{"tf":1.0},"21":{"tf":1.0}},"df":2}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0}},"df":4}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.4142135623730951},"24":{"tf":1.0},"3":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951}},"df":7,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"s":{"docs":{},"df":0,"v":{"docs":{"18":{"tf":1.0},"22":{"tf":1.0}},"df":2}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}},"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.4142135623730951},"22":{"tf":1.0},"4":{"tf":1.0}},"df":3}}}}}},"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{"22":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"17":{"tf":1.0}},"df":1}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"14":{"tf":1.0},"20":{"tf":1.0}},"df":2}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{"13":{"tf":1.0},"14":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.0}},"df":4}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"v":{"docs":{"5":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.4142135623730951},"18":{"tf":1.0},"21":{"tf":1.0}},"df":3,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":4}}}}},"h":{"docs":{"9":{"tf":1.0}},"df":1,"o":{"docs":{"22":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"g":{"docs":{"7":{"tf":1.0},"9":{"tf":1.0}},"df":2}}},"m":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"17":{"tf":1.4142135623730951},"18":{"tf":1.4142135623730951}},"df":2,"_":{"docs":{},"df":0,"b":{"docs":{"17":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"17":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0}},"df":2}}}},"w":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"12":{"tf":1.4142135623730951},"13":{"tf":1.7320508075688772},"14":{"tf":1.0},"20":{"tf":2.0},"6":{"tf":1.0}},"df":7}},"u":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.4142135623730951},"14":{"tf":1.0},"18":{"tf":1.7320508075688772},"22":{"tf":1.4142135623730951},"6":{"tf":1.0},"7":{"tf":1.0}},"df":6,"_":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"17":{"tf":1.0},"18":{"tf":1.0}},"df":2}}}}}},"s":{"docs":{"10":{"tf":1.0},"11":{"tf":3.0},"12":{"tf":1.4142135623730951},"18":{"tf":1.0},"4":{"tf":1.7320508075688772},"5":{"tf":1.0},"6":{"tf":1.4142135623730951}},"df":7,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}}}}}},"t":{"docs":{"11":{"tf":1.0}},"df":1}},"_":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"3":{"tf":1.7320508075688772},"5":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":9}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.4142135623730951},"17":{"tf":1.0},"4":{"tf":2.8284271247461903}},"df":3}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{"14":{"tf":1.4142135623730951}},"df":1}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"4":{"tf":2.0},"5":{"tf":1.0}},"df":3,"[":{"docs":{},"df":0,"i":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0},"24":{"tf":1.0},"6":{"tf":1.0}},"df":3}}}},"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"4":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}},"e":{"docs":{"9":{"tf":1.0}},"df":1,"d":{"docs":{"0":{"tf":1.7320508075688772},"16":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.4142135623730951},"3":{"tf":1.7320508075688772}},"df":7},"n":{"docs":{"8":{"tf":1.0}},"df":1}},"l":{"docs":{"0":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0}},"df":3,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"10":{"tf":1.7320508075688772},"11":{"tf":1.4142135623730951},"12":{"tf":1.0},"14":{"tf":1.4142135623730951},"16":{"tf":1.4142135623730951},"17":{"tf":1.4142135623730951},"23":{"tf":1.4142135623730951},"4":{"tf":1.7320508075688772},"5":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":2.0}},"df":13,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"4":{"tf":1.0},"5":{"tf":1.0}},"df":2,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"b":{"docs":{"4":{"tf":1.0},"5":{"tf":1.4142135623730951}},"df":2}}}}}}}}},"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,"|":{"docs":{},"df":0,"&":{"docs":{},"df":0,"i":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}},"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0}},"df":1}}}}},":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"!":{"docs":{},"df":0,"[":{"docs":{},"df":0,"0":{"docs":{"17":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}}}},"f":{"docs":{"5":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"c":{"docs":{},"df":0,"p":{"docs":{},"df":0,"d":{"docs":{"14":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"h":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}},"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"14":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{"14":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"p":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"16":{"tf":1.0}},"df":4}}},"r":{"docs":{},"df":0,"v":{"docs":{"0":{"tf":1.0}},"df":1}},"t":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"14":{"tf":1.0},"7":{"tf":1.0}},"df":4}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{"2":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"e":{"docs":{"16":{"tf":1.0},"18":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":3}}},"i":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"20":{"tf":1.4142135623730951}},"df":1}}}}},"g":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{"18":{"tf":1.0}},"df":1}},"n":{"docs":{"17":{"tf":1.0},"21":{"tf":1.0},"4":{"tf":2.449489742783178}},"df":3,"a":{"docs":{},"df":0,"l":{"docs":{"3":{"tf":1.0}},"df":1},"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.4142135623730951},"17":{"tf":1.0}},"df":2}}}}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"17":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"c":{"docs":{"16":{"tf":1.0}},"df":1},"g":{"docs":{},"df":0,"l":{"docs":{"11":{"tf":1.0}},"df":1}}},"z":{"docs":{},"df":0,"e":{"docs":{"11":{"tf":1.0},"16":{"tf":1.0},"24":{"tf":1.0},"6":{"tf":1.0}},"df":4}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}},"df":3,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"24":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}}}},"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"14":{"tf":1.0},"21":{"tf":1.0}},"df":2,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"b":{"docs":{},"df":0,"_":{"docs":{},"df":0,"u":{"docs":{},"df":0,"p":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"r":{"docs":{},"df":0,"h":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"r":{"docs":{"16":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"b":{"docs":{"3":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0},"8":{"tf":1.0}},"df":2}},"v":{"docs":{"11":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":4,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.4142135623730951},"21":{"tf":1.7320508075688772},"22":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":9,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.4142135623730951},"14":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":3}}}}}}}}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,".":{"docs":{},"df":0,"0":{"docs":{"18":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"n":{"docs":{"6":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"a":{"docs":{"0":{"tf":1.0},"14":{"tf":1.7320508075688772},"23":{"tf":2.0}},"df":3,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"h":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{"14":{"tf":1.0}},"df":1}}}}},"+":{"docs":{},"df":0,"n":{"docs":{},"df":0,"n":{"docs":{},"df":0,"l":{"docs":{"14":{"tf":1.0}},"df":1}}}},"c":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"6":{"tf":1.0}},"df":2}},"n":{"docs":{"6":{"tf":1.0}},"df":1},"r":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0},"24":{"tf":1.4142135623730951},"6":{"tf":1.4142135623730951}},"df":3,"(":{"docs":{},"df":0,"d":{"docs":{"6":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"s":{"docs":{},"df":0,"k":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"x":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}},"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{},"df":0,"(":{"docs":{},"df":0,"3":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"c":{"docs":{"16":{"tf":1.0},"18":{"tf":1.0}},"df":2,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0}},"df":2}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"23":{"tf":1.0}},"df":4,"l":{"docs":{"12":{"tf":1.0}},"df":1}}}}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0}},"df":2}}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"14":{"tf":1.0},"17":{"tf":1.0},"2":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":7}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"16":{"tf":1.0},"18":{"tf":1.0}},"df":2}}}}},"r":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"18":{"tf":1.0},"8":{"tf":1.0}},"df":4}},"y":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0}},"df":3}},"e":{"docs":{},"df":0,"p":{"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":2.23606797749979}},"df":2}},"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"p":{"docs":{"7":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"7":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.0},"4":{"tf":1.0}},"df":2}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"13":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"7":{"tf":1.0}},"df":1}}}}}},"y":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"11":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}},"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.0},"24":{"tf":1.4142135623730951},"6":{"tf":2.23606797749979}},"df":3}}}},"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"13":{"tf":1.0},"19":{"tf":1.0}},"df":2}}}},"h":{"docs":{"0":{"tf":1.0},"4":{"tf":1.0}},"df":2}},"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}},"m":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"17":{"tf":1.0},"5":{"tf":1.0}},"df":4,"_":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0}},"df":1}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"y":{"docs":{},"df":0,".":{"docs":{},"df":0,"j":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}}}}},"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"14":{"tf":1.0},"19":{"tf":1.0}},"df":2}}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"18":{"tf":1.0}},"df":1}}}},"y":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0}},"df":1},"t":{"docs":{},"df":0,"h":{"docs":{"22":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"14":{"tf":1.0}},"df":2}},"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{"16":{"tf":1.4142135623730951},"18":{"tf":1.4142135623730951}},"df":2}}}}}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{"7":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"2":{"tf":1.4142135623730951},"3":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":5,".":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"21":{"tf":1.0}},"df":1}}},"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"2":{"tf":1.0}},"df":1}}}},"[":{"docs":{},"df":0,"k":{"docs":{"1":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0}},"df":2}}},"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0}},"df":1}},"n":{"docs":{"11":{"tf":1.0}},"df":1,"d":{"docs":{"11":{"tf":1.0}},"df":1},"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":2.0},"1":{"tf":1.7320508075688772},"2":{"tf":1.0},"21":{"tf":1.0},"3":{"tf":1.0},"6":{"tf":1.0}},"df":6,"3":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"m":{"docs":{"9":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"14":{"tf":1.0}},"df":1}}}}},"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.7320508075688772}},"df":1}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"5":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.4142135623730951}},"df":1}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"18":{"tf":1.0}},"df":2}},"e":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0}},"df":4}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{"6":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":3,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}},"i":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0}},"df":1},"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"m":{"docs":{},"df":0,"e":{"docs":{"13":{"tf":1.0},"22":{"tf":1.7320508075688772}},"df":2}},"n":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"7":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"2":{"tf":1.0}},"df":1}}}},"l":{"docs":{"21":{"tf":1.0}},"df":1},"o":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0}},"df":1}},"p":{"docs":{"14":{"tf":1.0}},"df":1},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"14":{"tf":1.4142135623730951}},"df":1}}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0}},"df":2}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"10":{"tf":1.0},"14":{"tf":1.0},"8":{"tf":1.0}},"df":3}},"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"6":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"17":{"tf":1.0},"18":{"tf":2.6457513110645907},"22":{"tf":1.4142135623730951}},"df":3,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}},"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"2":{"tf":1.0}},"df":1}}}}}},"p":{"docs":{},"df":0,"l":{"docs":{"6":{"tf":1.0}},"df":1}},"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"14":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"e":{"docs":{"16":{"tf":1.0},"17":{"tf":1.0},"5":{"tf":1.4142135623730951}},"df":3},"t":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0},"17":{"tf":1.7320508075688772},"18":{"tf":1.0},"22":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":5}}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"2":{"tf":1.0},"8":{"tf":1.0}},"df":2}}},"w":{"docs":{},"df":0,"o":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.4142135623730951}},"df":6}},"y":{"docs":{"0":{"tf":1.0}},"df":1},"̂":{"docs":{},"df":0,"‖":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{"3":{"tf":1.0}},"df":1}}}},"‖":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{"3":{"tf":1.0}},"df":1}}}},"u":{"docs":{"2":{"tf":1.0}},"df":1,"2":{"docs":{"2":{"tf":1.0}},"df":1,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"z":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"15":{"tf":1.0},"18":{"tf":1.0},"8":{"tf":1.0}},"df":3}}}}}}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"19":{"tf":1.0},"22":{"tf":1.0},"3":{"tf":1.0}},"df":4}}},"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"2":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":3,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.4142135623730951}},"df":1}},"t":{"docs":{"2":{"tf":1.0},"7":{"tf":1.0}},"df":2,",":{"docs":{},"df":0,"1":{"docs":{"2":{"tf":1.0}},"df":1},"2":{"docs":{"2":{"tf":1.0}},"df":1,")":{"docs":{},"df":0,"(":{"docs":{},"df":0,"a":{"docs":{"9":{"tf":1.0}},"df":1}}}},"3":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}}},"i":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{"0":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":2}},"t":{"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.0},"11":{"tf":1.4142135623730951}},"df":3}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"22":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"17":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"x":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"23":{"tf":1.4142135623730951}},"df":3}}}},"p":{"docs":{"1":{"tf":1.0},"14":{"tf":1.0},"2":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0}},"df":5,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"2":{"tf":1.0},"7":{"tf":1.7320508075688772},"9":{"tf":1.4142135623730951}},"df":5}}}},"r":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"14":{"tf":1.0}},"df":1,".":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}},"s":{"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.7320508075688772},"13":{"tf":1.4142135623730951},"14":{"tf":1.7320508075688772},"16":{"tf":1.0},"17":{"tf":1.7320508075688772},"18":{"tf":1.0},"2":{"tf":1.4142135623730951},"3":{"tf":2.0},"4":{"tf":2.0},"5":{"tf":1.4142135623730951},"6":{"tf":1.4142135623730951},"8":{"tf":2.0},"9":{"tf":1.4142135623730951}},"df":14,"e":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0}},"df":1}}}},"v":{"docs":{"11":{"tf":1.7320508075688772}},"df":1,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"19":{"tf":1.0}},"df":1}},"u":{"docs":{"10":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0}},"df":3}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"19":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0},"23":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":4}}}}}},"e":{"docs":{},"df":0,"c":{"docs":{"18":{"tf":1.0}},"df":1,"!":{"docs":{},"df":0,"[":{"docs":{},"df":0,"0":{"docs":{"13":{"tf":1.0},"14":{"tf":1.0},"5":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":4},"1":{"docs":{"0":{"tf":1.4142135623730951},"17":{"tf":1.4142135623730951},"4":{"tf":1.0},"8":{"tf":1.0}},"df":4,".":{"docs":{},"df":0,"0":{"docs":{"13":{"tf":1.0},"5":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":3}}},"2":{"docs":{"4":{"tf":1.0}},"df":1},"3":{"docs":{"18":{"tf":1.0}},"df":1}}},"<":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{"16":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"u":{"docs":{"23":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"a":{"docs":{"5":{"tf":1.0}},"df":1}}},"w":{"docs":{"11":{"tf":1.4142135623730951},"14":{"tf":1.0}},"df":2,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"<":{"docs":{},"df":0,"f":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"22":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"14":{"tf":1.0}},"df":2,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"p":{"docs":{"14":{"tf":1.0}},"df":1},"r":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}},"l":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"9":{"tf":1.0}},"df":5}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"18":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"e":{"docs":{"4":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"14":{"tf":1.0},"20":{"tf":1.0}},"df":2}}},"n":{"docs":{"4":{"tf":1.0}},"df":1},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0},"4":{"tf":1.0}},"df":2}}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{"9":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"s":{"docs":{"14":{"tf":1.4142135623730951}},"df":1}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"0":{"tf":1.0},"4":{"tf":1.0}},"df":2}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.0},"18":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0}},"df":4}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"17":{"tf":1.0}},"df":1,"l":{"docs":{},"df":0,"i":{"docs":{"15":{"tf":1.0}},"df":1}}}}}},"v":{"docs":{"14":{"tf":1.4142135623730951}},"df":1}},"x":{"docs":{"1":{"tf":2.23606797749979},"2":{"tf":2.23606797749979},"4":{"tf":1.4142135623730951},"7":{"tf":1.0},"9":{"tf":1.0}},"df":5,"[":{"docs":{},"df":0,"i":{"docs":{},"df":0,",":{"docs":{},"df":0,"r":{"docs":{"2":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0}},"df":1}}},"y":{"docs":{"2":{"tf":1.0}},"df":1,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{"2":{"tf":1.0}},"df":1}}},"[":{"docs":{},"df":0,"i":{"docs":{},"df":0,"*":{"docs":{},"df":0,"q":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"[":{"docs":{},"df":0,"j":{"docs":{},"df":0,",":{"docs":{},"df":0,"r":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{"11":{"tf":1.4142135623730951},"17":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0}},"df":4}}}}}},"breadcrumbs":{"root":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"11":{"tf":1.0}},"df":1},"n":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"9":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"20":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"n":{"docs":{"5":{"tf":1.0}},"df":1}}}}}},"b":{"docs":{"10":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0}},"df":4}}}}}}}}},"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"19":{"tf":1.4142135623730951},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0}},"df":6}}}}},"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.4142135623730951}},"df":3}}}}}}}},"p":{"docs":{"1":{"tf":1.4142135623730951},"2":{"tf":1.0},"3":{"tf":1.0}},"df":3}},"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"16":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}},"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0}},"df":6}}}}}}}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.0}},"df":1}}}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0}},"df":3}}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"df":5}}}}},"g":{"docs":{"11":{"tf":1.0}},"df":1},"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"19":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0}},"df":6}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{"10":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.4142135623730951},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0}},"df":6}}}}}},"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{"14":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.0}},"df":1}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"8":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"13":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951}},"df":1}}}}}}}}},"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"10":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{"19":{"tf":1.4142135623730951},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0}},"df":6}}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"17":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.4142135623730951},"2":{"tf":1.0},"3":{"tf":1.0},"6":{"tf":1.0}},"df":4}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"3":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"m":{"docs":{"3":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"14":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"x":{"docs":{"11":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.0}},"df":1}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0}},"df":1}}},"f":{"docs":{"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0}},"df":3}}},"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"9":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"df":5}}}}},"p":{"docs":{},"df":0,"a":{"docs":{"13":{"tf":1.0}},"df":1,"r":{"docs":{},"df":0,"k":{"docs":{"24":{"tf":1.0}},"df":1}}}},"y":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"22":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0}},"df":4}}}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.4142135623730951},"2":{"tf":1.0},"3":{"tf":1.0}},"df":3}}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.4142135623730951},"2":{"tf":1.4142135623730951},"3":{"tf":1.0}},"df":3}}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"23":{"tf":1.0}},"df":4}}}}}}},"title":{"root":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"11":{"tf":1.0}},"df":1},"n":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"9":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"20":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"n":{"docs":{"5":{"tf":1.0}},"df":1}}}}}},"b":{"docs":{"10":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}}},"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"19":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}}}}}},"p":{"docs":{"1":{"tf":1.0}},"df":1}},"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"16":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{"21":{"tf":1.0}},"df":1}}}}}}},"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.0},"4":{"tf":1.0}},"df":2}}}}}}}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"3":{"tf":1.0}},"df":1}}}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"4":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"7":{"tf":1.0}},"df":1}}}}},"g":{"docs":{"11":{"tf":1.0}},"df":1},"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"19":{"tf":1.0},"20":{"tf":1.0}},"df":2}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{"10":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0}},"df":1}}}}}},"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{"14":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.0}},"df":1}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"8":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"13":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}},"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"10":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{"19":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"17":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0},"6":{"tf":1.0}},"df":2}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}},"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"3":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"m":{"docs":{"3":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"14":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"x":{"docs":{"11":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.0}},"df":1}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0}},"df":1}}},"f":{"docs":{"12":{"tf":1.0}},"df":1}}},"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"9":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"7":{"tf":1.0}},"df":1}}}}},"p":{"docs":{},"df":0,"a":{"docs":{"13":{"tf":1.0}},"df":1,"r":{"docs":{},"df":0,"k":{"docs":{"24":{"tf":1.0}},"df":1}}}},"y":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"22":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0}},"df":1}}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0},"2":{"tf":1.0}},"df":2}}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{"12":{"tf":1.0},"23":{"tf":1.0}},"df":2}}}}}}}},"documentStore":{"save":true,"docs":{"0":{"body":"dcpd decomposes a third-order data tensor into a sum of rank-one components\\nwhile forcing one of the three factor matrices to be built from the columns of\\na known matrix of candidate signatures — a dictionary. Instead of first\\nfactorizing blindly and then matching each extracted column to its closest\\nknown signature, the matching happens inside the decomposition itself. That\\nbuys two things: Identifiability. A plain matrix factorization M = A Bᵀ is never unique\\n( A P P⁻¹ Bᵀ fits equally well for any invertible P), and even tensor\\ndecompositions lose uniqueness in unlucky regimes such as nearly collinear\\nfactor columns. Tying B to a finite set of atoms removes the rotation\\nambiguity as long as no small group of atoms is linearly dependent — a\\ncondition measured by the spark of the dictionary, which the crate can\\nverify by brute force. Accuracy. When the atoms are correct, constraining the search space\\nshrinks the estimation error of the remaining free factors. The crate ships: dense third-order tensor kernels (unfoldings, Khatri-Rao products, rank-R\\nreconstruction) under a fixed, documented memory layout; the greedy solver family — MPALS and its smooth and fully flexible\\nrelatives — plus a continuous fast-gradient solver that relaxes the binary\\nselection into a nonnegative score matrix on the unit sphere; the matrix specialization where the data’s own rows serve as the\\ndictionary (the pure-pixel model of hyperspectral unmixing), with SPA\\ninitialization and exact nonnegative least-squares abundances; a seeded Monte Carlo benchmark harness that reproduces the synthetic\\nidentification experiments end to end, with CSV/JSON/gnuplot outputs; a dcpd command-line tool wrapping all of the above. Every stochastic routine takes an explicit seed and every tie-break is\\ndeterministic, so any run — including multi-threaded benchmark grids — can be\\nreproduced bit for bit. The code snippets in this guide compile and run as part of the crate’s test\\nsuite ( cargo test --workspace exercises them as doc-tests), so they stay in\\nsync with the library. #![allow(unused)] fn main() {\\nuse dcpd::solvers::{init_random, mpals, SolverConfig};\\nuse dcpd::tensor::cpd_reconstruct; // a tiny synthetic problem: 8 unit-norm atoms, rank 2\\nlet dict = dcpd::Dictionary::new( { let mut atoms = dcpd::Matrix::from_fn(6, 8, |i, j| ((i * 7 + j * 13) % 5) as f64 - 1.5); atoms.normalize_cols(); atoms }, None,\\n)?;\\nlet sel = dcpd::Selection::new(vec![1, 4], vec![1, 1])?;\\nlet truth = dcpd::Factors::new( init_random((5, 6, 4), 2, 7).a, dcpd::dictionary::project(&sel, &dict)?, init_random((5, 6, 4), 2, 8).c,\\n)?;\\nlet tensor = cpd_reconstruct(&truth); // decompose from a random start and recover the two atoms\\nlet cfg = SolverConfig { rank: 2, seed: 3, ..Default::default() };\\nlet report = mpals(&tensor, &cfg, &init_random(tensor.dims(), 2, 3), &dict)?;\\nlet mut got = report.selection.unwrap().indices;\\ngot.sort_unstable();\\nassert_eq!(got, vec![1, 4]); Ok::<(), dcpd::Error>(()) }","breadcrumbs":"Introduction » Introduction","id":"0","title":"Introduction"},"1":{"body":"A Tensor3 is a dense K x L x M array of f64\\nstored row-major: entry (k, l, m) lives at k*L*M + l*M + m. A rank-R\\ncanonical polyadic (CP) model writes the tensor as a sum of R rank-one\\ntensors, collected in three factor matrices A: K x R, B: L x R, C: M x R: T[k, l, m] = sum_r A[k, r] * B[l, r] * C[m, r] Each component is only determined up to two scalings — (α a, β b, c / (α β))\\nreconstructs the same tensor — which is why dictionary constraints later pin\\nthe B columns to concrete atoms and let A and C absorb the scales.","breadcrumbs":"Tensors, unfoldings, and the CP model » Tensors, unfoldings, and the CP model","id":"1","title":"Tensors, unfoldings, and the CP model"},"10":{"body":"With a fixed λ and no replacement step, B stays a free matrix pulled\\ntoward its selected atoms, and the objective becomes ‖T - (A ⊗ B ⊗ C) I_R‖²_F + λ ‖B - DS‖²_F. Every block update ( A, C, B, and — when atoms have unit norm — the\\nre-selection of S) is an exact minimizer of this objective, so the cost is\\nnonincreasing at every step and converges. The price is that the returned B is not exactly a set of atoms; the tracked selection tells you which\\natoms it leans on. λ = 0.04 is the benchmark default; larger values pin B tighter to the dictionary.","breadcrumbs":"The solver family » Flex-MPALS — keep B flexible","id":"10","title":"Flex-MPALS — keep B flexible"},"11":{"body":"The continuous solver replaces the binary S by a dense nonnegative matrix\\nwith unit-norm columns and minimizes ½ ‖T - (A ⊗ DS ⊗ C) I_R‖²_F + δ ‖S‖₁ s.t. S ≥ 0, ‖s_i‖₂ = 1, with an accelerated (Nesterov-style) projected gradient on S — ten inner\\niterations per outer iteration — while A and C keep their least-squares\\nupdates. The ℓ₁ weight δ ramps linearly from 0 to delta_max across the\\nouter-iteration budget, gradually pushing each column toward a single atom\\n(on the unit sphere, minimizing ‖s‖₁ favors the coordinate axes). The step\\nsize is the inverse of λ_max(DᵀD) · λ_max(AᵀA ∘ CᵀC), additionally capped\\nso every column keeps at least one positive entry — making the per-column\\nrenormalization always well defined. At termination each column is binarized\\nto its largest entry and A, C are re-solved against the selected atoms. #![allow(unused)] fn main() {\\nuse dcpd::solvers::{fg_gradient, fg_safety_step};\\nuse dcpd::Matrix; use dcpd::Dictionary; let mut atoms = Matrix::from_fn(5, 7, |i, j| ((i + 2 * j) % 4) as f64 + 0.5); atoms.normalize_cols(); let dict = Dictionary::new(atoms, None)?;\\nlet s = { let mut s = Matrix::from_fn(7, 2, |i, j| ((i * 3 + j) % 5) as f64 * 0.2 + 0.1); s.normalize_cols(); s\\n};\\nlet gram = Matrix::identity(2);\\nlet w = Matrix::zeros(7, 2);\\nlet g = fg_gradient(&dict, &s, &gram, &w, 0.1);\\nlet step = fg_safety_step(&s, &g, 4.0);\\nassert!(step > 0.0 && step <= 0.25); // never exceeds 1/eps // after the capped step and clamping, no column can die\\nlet mut next = s.add_scaled(-step, &g);\\nfor v in next.data_mut() { if *v < 0.0 { *v = 0.0; } }\\nfor j in 0..2 { assert!(next.col_norm(j) > 0.0);\\n} Ok::<(), dcpd::Error>(()) } In the benchmarks the greedy family clearly outperforms the continuous\\nrelaxation: once the gradient iteration zeroes an entry it tends to stay\\nzero, so ALS-FG rarely escapes the basin of its initial selection, while\\nMPALS’s hard projection hops basins freely.","breadcrumbs":"The solver family » ALS-FG — relax the selection","id":"11","title":"ALS-FG — relax the selection"},"12":{"body":"When no external dictionary exists, the data itself can be one. For a matrix M of n pixels by L spectral bands, the pure-pixel (separability)\\nassumption says some rows of M are unmixed material spectra; the model M = A (Mᵀ S)ᵀ, S binary with one 1 per column selects R pixel rows as endmembers and explains every other pixel as a\\nnonnegative combination of them. The dictionary is Mᵀ — referenced, never\\ncopied — with as many atoms as pixels; one refinement iteration costs O(n·L·R).","breadcrumbs":"Self-dictionary unmixing » Self-dictionary unmixing","id":"12","title":"Self-dictionary unmixing"},"13":{"body":"The successive projection algorithm picks the row with the largest residual\\nnorm, projects all rows onto its orthogonal complement, and repeats R times.\\nOn exactly separable data it recovers the pure pixels; with noise it is a\\nstrong, fast starting point. #![allow(unused)] fn main() {\\nuse dcpd::selfdict::{spa, HsiMatrix};\\nuse dcpd::Matrix; // rows: two pure spectra and a mixture of them\\nlet m = Matrix::from_vec(3, 2, vec![1.0, 0.0, 0.0, 1.0, 0.5, 0.5])?;\\nlet hsi = HsiMatrix::new(m, None)?;\\nassert_eq!(spa(&hsi, 2)?, vec![0, 1]); Ok::<(), dcpd::Error>(()) }","breadcrumbs":"Self-dictionary unmixing » SPA initialization","id":"13","title":"SPA initialization"},"14":{"body":"self_dcpd runs the matrix specialization of MPALS (or SMPALS) on top of any\\ninitial index set: exact per-pixel NNLS for the abundances, a least-squares\\nendmember estimate, and an assignment-based re-selection of R distinct\\npixels (repetition is never allowed here). The best iterate is tracked, so\\nthe refined solution never reports a worse reconstruction error than its own\\ninitialization. After the loop, a capped batch of exact NNLS passes polishes\\nthe abundances. #![allow(unused)] fn main() {\\nuse dcpd::selfdict::{self_dcpd, spa, HsiMatrix, SelfDictVariant};\\nuse dcpd::solvers::SolverConfig;\\nuse dcpd::Matrix; // separable synthetic data: 30 pixels, 6 bands, 3 pure pixels up front\\nlet spectra = Matrix::from_fn(6, 3, |i, j| ((i * 3 + j * 5) % 7) as f64 * 0.2 + 0.1);\\nlet mut weights = Matrix::zeros(30, 3);\\nfor r in 0..3 { weights.set(r, r, 1.0); }\\nfor p in 3..30 { let w = [(p % 3) as f64, ((p + 1) % 4) as f64, ((p + 2) % 5) as f64]; let total: f64 = w.iter().sum::<f64>() + 1.0; for (r, wv) in w.iter().enumerate() { weights.set(p, r, 0.8 * wv / total); }\\n}\\nlet hsi = HsiMatrix::new(weights.matmul_t(&spectra), None)?; let init = spa(&hsi, 3)?;\\nlet cfg = SolverConfig { rank: 3, max_outer_iters: 50, ..Default::default() };\\nlet result = self_dcpd(&hsi, 3, &cfg, &init, SelfDictVariant::Mpals)?; assert!(result.rel_err <= result.init_rel_err); // never worse than SPA+NNLS\\nassert!(result.rel_err < 1e-10); // exact on separable data\\nlet mut got = result.endmember_indices.clone();\\ngot.sort_unstable();\\nassert_eq!(got, vec![0, 1, 2]); Ok::<(), dcpd::Error>(()) } On real hyperspectral scenes (e.g. the Urban and Terrain scenes, which the\\nuser supplies as files), the same pipeline consistently cuts the relative\\nreconstruction error of every geometric initializer — that is the d-\\nprefix convention the CLI prints: spa → d-spa. The result carries a per-pixel residual map ( ‖m_i - a_i Bᵀ‖₂), reshaped to\\nthe image grid when the input declares height/ width, plus a marker file\\nwith the coordinates of the selected pure pixels for plotting. The flexible variant (endmembers allowed to drift off the data rows) is\\navailable behind SelfDictVariant::Flex, but it is excluded from error\\ncomparisons by default: freeing the endmembers trivially lowers the\\nreconstruction error without making the abundances more interpretable.","breadcrumbs":"Self-dictionary unmixing » Greedy refinement","id":"14","title":"Greedy refinement"},"15":{"body":"The harness generates hard instances on purpose: a large dictionary of highly\\ncorrelated atoms, moderate noise, wrongly estimated ranks, and ill-conditioned\\nfactors. On easy data an unconstrained decomposition followed by projection\\nidentifies atoms almost as well as the constrained solvers; the gap opens in\\nthe hard regimes.","breadcrumbs":"The synthetic benchmark » The synthetic benchmark","id":"15","title":"The synthetic benchmark"},"16":{"body":"Dictionary — d atoms in c classes (defaults 1000 and 50). Each class\\nshares a random linear baseline; each atom adds a sinc bump and a two-lobe\\ntriangular feature at random positions, takes absolute values, and is\\nnormalized. Within a class, atom correlations routinely exceed 0.999, so\\nidentification genuinely has to separate near-duplicates. A collinearity\\ncheck regenerates any exact duplicates, and max_intraclass_cosine reports\\nthe realized correlation. Factors — A and C have i.i.d. standard normal entries with\\nnormalized columns; the true selection picks one atom in each of R\\ndistinct classes. Conditioning of C is controlled by C ← C (ρI + (1-ρ)/R · 11ᵀ): ρ = 1 leaves it well conditioned, ρ = 0\\ncollapses it to rank one. Noise — seeded i.i.d. Gaussian with σ = 0.01 by default, about\\n11.5 dB SNR at the default sizes. #![allow(unused)] fn main() {\\nuse dcpd::synthbench::{gen_dictionary, gen_factors, max_intraclass_cosine, SynthSpec}; let spec = SynthSpec { atoms: 60, classes: 12, rank: 4, dims: (8, 30, 5), ..Default::default() };\\nlet dict = gen_dictionary(&spec, 11)?;\\nassert!(dict.is_unit_norm());\\nassert!(max_intraclass_cosine(&dict) > 0.5); let (factors, selection) = gen_factors(&spec, &dict, 3)?;\\nlet labels = dict.class_labels().unwrap();\\nlet mut classes: Vec<usize> = selection.indices.iter().map(|&i| labels[i]).collect();\\nclasses.dedup();\\nassert_eq!(classes.len(), 4); // one atom per class\\nassert_eq!(factors.b.cols(), 4); Ok::<(), dcpd::Error>(()) }","breadcrumbs":"The synthetic benchmark » Data generation","id":"16","title":"Data generation"},"17":{"body":"Identification rate — the fraction of estimated atom indices that match\\nthe ground-truth selection (maximum matching on exact index equality),\\nnormalized by max(R, Re) so that rank mismatch counts unmatched columns\\nas misses. The best achievable value is min(R, Re) / max(R, Re)\\n( oracle_rate); the complementary forced-miss fraction is exposed as oracle_miss. rMSE on B — permutation- and scale-invariant squared error between the\\ntrue atoms and the selected atoms, i.e. how far the picked signatures are\\nfrom the truth even when the indices are wrong. Matching maximizes the\\nsummed ‖b‖² cos² similarity, which provably minimizes the matched error. Relative reconstruction error and per-solver runtime round out the\\nper-trial record. #![allow(unused)] fn main() {\\nuse dcpd::synthbench::{identification_rate, oracle_rate, rmse_b};\\nuse dcpd::Selection;\\nuse dcpd::Matrix; let truth = Selection::new(vec![0, 1, 2, 3, 4, 5, 6, 7, 8, 9], vec![1; 10])?;\\nlet est = Selection::new(vec![0, 1, 2, 3, 4, 5, 6], vec![1; 7])?;\\nassert!((identification_rate(&truth, &est, 10, 7) - 0.7).abs() < 1e-12);\\nassert!((oracle_rate(10, 7) - 0.7).abs() < 1e-12); // rmse is zero for any permuted, rescaled, sign-flipped copy\\nlet b = Matrix::from_fn(6, 3, |i, j| ((i * 2 + j * 7) % 5) as f64 - 2.0);\\nlet mut flipped = b.clone();\\nflipped.scale_col(1, -3.0);\\nassert!(rmse_b(&b, &flipped)? < 1e-12); Ok::<(), dcpd::Error>(()) }","breadcrumbs":"The synthetic benchmark » Metrics","id":"17","title":"Metrics"},"18":{"body":"run_grid sweeps the estimated rank Re (at ρ = 1) and the conditioning ρ (at Re = R), running N trials per cell. One dictionary realization is\\nshared by the whole grid; each trial derives its factor, noise, and\\ninitialization seeds from base_seed XOR trial_index, so results are\\nidentical no matter how many worker threads run the trials. Per cell and\\nsolver the report aggregates mean identification rate, mean rMSE, mean\\nreconstruction error, runtimes, and failure counts (a cell is flagged when\\nmore than 10% of its trials fail). The protocol initializes every solver from one shared unconstrained ALS run\\nper trial (plus a randomly initialized MPALS with a five-fold iteration\\nbudget), mirroring how the projected baseline is computed: same start, the\\nonly difference is whether the dictionary participates during the\\ndecomposition or only afterwards. #![allow(unused)] fn main() {\\nuse dcpd::synthbench::{run_grid, BenchSolver, InitPolicy, SynthSpec}; let spec = SynthSpec { dims: (6, 25, 4), atoms: 40, classes: 8, rank: 3, re_values: vec![3], rho_values: vec![], trials: 2, sigma: 0.0, base_seed: 7, init: InitPolicy::Truth, ..Default::default()\\n};\\nlet report = run_grid(&spec, &[BenchSolver::Mpals, BenchSolver::ProjectedAls], 1)?;\\n// noiseless + truth-initialized: everyone identifies everything\\nfor s in &report.summaries { assert_eq!(s.mean_id_rate, Some(1.0));\\n} Ok::<(), dcpd::Error>(()) } The CLI writes the per-trial CSV ( report.csv), the aggregate JSON, and\\ngnuplot-ready .dat/ .gp pairs for the three standard figures:\\nidentification rate against Re, identification rate against ρ, and rMSE\\nagainst ρ.","breadcrumbs":"The synthetic benchmark » Grids, seeds, reproducibility","id":"18","title":"Grids, seeds, reproducibility"},"19":{"body":"The dcpd binary exposes four subcommands. Exit codes: 0 success, 1 i/o\\nerror, 2 validation or model error, 3 numerical failure. Every command is\\ndeterministic under --seed (the DCPD_SEED environment variable supplies a\\ndefault); option precedence is flag > config file > built-in default.","breadcrumbs":"Command line and file formats » Command line and file formats","id":"19","title":"Command line and file formats"},"2":{"body":"Matricizing the tensor along one mode turns the trilinear model into an\\nordinary matrix product. The crate fixes these column orderings: mode shape column index identity 1 K x (L*M) l*M + m unfold(T,1) = A (B kr C)ᵀ 2 L x (K*M) k*M + m unfold(T,2) = B (A kr C)ᵀ 3 M x (K*L) k*L + l unfold(T,3) = C (A kr B)ᵀ where kr is the Khatri-Rao (columnwise Kronecker) product, (X kr Y)[i*q + j, r] = X[i,r] * Y[j,r]. The orderings and the Khatri-Rao\\nconvention are chosen together so the three identities hold exactly, not\\njust up to a permutation of columns — everything downstream (least-squares\\nupdates, gradients) relies on this. #![allow(unused)] fn main() {\\nuse dcpd::tensor::{cpd_reconstruct, khatri_rao, refold, unfold};\\nuse dcpd::solvers::init_random; let f = init_random((3, 4, 2), 2, 42);\\nlet t = cpd_reconstruct(&f); // unfold(T, 2) equals B (A kr C)^T entry for entry\\nlet u2 = unfold(&t, 2)?;\\nlet kr = khatri_rao(&f.a, &f.c)?;\\nlet product = f.b.matmul_t(&kr);\\nfor (x, y) in u2.data().iter().zip(product.data()) { assert!((x - y).abs() < 1e-12);\\n} // refold inverts unfold exactly, for every mode\\nfor mode in 1..=3 { let u = unfold(&t, mode)?; assert_eq!(refold(&u, mode, t.dims())?, t);\\n} Ok::<(), dcpd::Error>(()) }","breadcrumbs":"Tensors, unfoldings, and the CP model » Unfoldings","id":"2","title":"Unfoldings"},"20":{"body":"Numeric arrays are raw little-endian f64 in row-major order with a JSON\\nsidecar at <path>.json: { \\"dims\\": [20, 50, 7], \\"order\\": \\"row-major\\", \\"dtype\\": \\"f64\\" } Matrices may instead be plain CSV (detected by the .csv extension, one row\\nper line). Hyperspectral inputs optionally carry \\"height\\" and \\"width\\"\\nkeys in the sidecar so residual maps can be reshaped to the image grid.\\nDictionaries are matrices, optionally with <path>.labels.csv holding atom_index,label rows. All indices in emitted artifacts are zero-based.","breadcrumbs":"Command line and file formats » Array files","id":"20","title":"Array files"},"21":{"body":"dcpd decompose --tensor T.bin --dict D.bin --solver mpals --rank 10 \\\\ --seed 42 --out results/ Solvers: als, projected-als, mpals, smpals, flex-mpals, als-fg.\\nSolver knobs are flags ( --max-iters, --tol, --nonneg, --no-repeat, --lambda, --p, --delta-max, --fg-inner-iters, --normalize-a) or a --config file.json with the same keys. Outputs: A.bin, B.bin, C.bin, selection.json (atom indices and signs), cost_trace.csv, and summary.json with the relative error, iteration count, and convergence\\nflag.","breadcrumbs":"Command line and file formats » decompose","id":"21","title":"decompose"},"22":{"body":"dcpd synth --trials 50 --re 7..13 --rho 0.1,0.5,1.0 --seed 1 --jobs 2 \\\\ --out bench/ Runs the benchmark grid and writes report.csv\\n( grid_param,value,solver,trial,id_rate,rmse_B,rel_err,runtime_s), aggregate.json, and the gnuplot bundle. --solvers picks a subset; --init truth is available for fixed-point diagnostics. Trials run in\\nparallel under --jobs, and reruns with the same seed produce byte-identical\\nfiles at any job count. Measured wall-clock times are all zeroed in the\\nartifacts unless --timings is passed, since real timings would break\\nbyte-reproducibility.","breadcrumbs":"Command line and file formats » synth","id":"22","title":"synth"},"23":{"body":"dcpd unmix --input urban.bin --rank 6 --init spa --variant mpals --out unmix/ --init is spa or a JSON file with pixel indices (so externally computed\\ninitializations drop in directly). The command prints the reconstruction\\nerror of the initialization and of the refined selection — the spa versus d-spa comparison — and writes endmember spectra, abundances, the residual\\nmap, the selected indices, and the pure-pixel marker file.","breadcrumbs":"Command line and file formats » unmix","id":"23","title":"unmix"},"24":{"body":"dcpd spark --matrix D.bin --kmax 5 Prints the spark (smallest dependent column-subset size) or exceeds kmax.\\nThe level-by-level search refuses to exceed a million subsets per level and\\nreports a budget error instead.","breadcrumbs":"Command line and file formats » spark","id":"24","title":"spark"},"3":{"body":"rel_frob_err reports ‖T - T̂‖_F / ‖T‖_F, the relative reconstruction\\nerror used throughout the benchmarks. add_gaussian_noise perturbs a tensor\\nwith seeded i.i.d. Gaussian noise and reports the realized signal-to-noise\\nratio in dB; the same seed always produces the same noise. #![allow(unused)] fn main() {\\nuse dcpd::tensor::{add_gaussian_noise, rel_frob_err};\\nuse dcpd::solvers::init_random;\\nuse dcpd::tensor::cpd_reconstruct; let t = cpd_reconstruct(&init_random((4, 5, 3), 2, 1));\\nlet (noisy, snr_db) = add_gaussian_noise(&t, 0.01, 7)?;\\nlet (again, _) = add_gaussian_noise(&t, 0.01, 7)?;\\nassert_eq!(noisy, again); // bit-identical under the same seed\\nassert!(snr_db > 0.0);\\nassert!(rel_frob_err(&t, &noisy)? < 0.2); Ok::<(), dcpd::Error>(()) }","breadcrumbs":"Tensors, unfoldings, and the CP model » Norms, errors, noise","id":"3","title":"Norms, errors, noise"},"4":{"body":"A Dictionary wraps an L x d matrix whose columns — the atoms — are\\ncandidate columns for the second factor. The constrained model replaces the\\nfree factor B by D S, where S is a binary d x R matrix with exactly\\none 1 per column: each model component must be (a scaled copy of) one atom.\\nThe crate stores such an S compactly as a Selection: one atom index and\\none sign per column. Why a sign? The CP scaling ambiguity admits negative scales, so a component\\nmay match an atom up to a flipped sign without changing the model. Scoring\\ntherefore uses the absolute normalized correlation score[i, j] = |<b_i, d_j>| / ||d_j|| and records the sign of the winning inner product in the selection, so that\\nprojecting onto the chosen atom preserves the fit. Pipelines that keep every\\nfactor nonnegative use the raw (sign-free) score instead and always carry +1 signs. #![allow(unused)] fn main() {\\nuse dcpd::dictionary::{match_scores, normalize_atoms, project, select_atoms, Dictionary};\\nuse dcpd::Matrix; let dict = normalize_atoms(&Dictionary::new( Matrix::from_fn(6, 10, |i, j| ((3 * i + 5 * j + i * j) % 11) as f64 - 3.0), None,\\n)?); // b\'s two columns are scaled copies of atoms 2 and 7, one with negative scale\\nlet b = Matrix::from_fn(6, 2, |i, c| { let (atom, scale) = [(2usize, 1.5), (7usize, -0.4)][c]; scale * dict.atoms().get(i, atom)\\n});\\nlet sel = select_atoms(&b, &dict, false, false)?;\\nassert_eq!(sel.indices, vec![2, 7]);\\nassert_eq!(sel.signs, vec![1, -1]); // projection reproduces the atoms with the recorded orientation\\nlet proj = project(&sel, &dict)?;\\nassert!(proj.get(0, 1) * dict.atoms().get(0, 7) <= 0.0); // scores are scale-invariant in b, so selection is too\\nlet scores = match_scores(&b, &dict)?;\\nassert_eq!(scores.rows(), 2);\\nassert_eq!(scores.cols(), 10); Ok::<(), dcpd::Error>(()) }","breadcrumbs":"Constraining a factor to a dictionary » Constraining a factor to a dictionary","id":"4","title":"Constraining a factor to a dictionary"},"5":{"body":"By default each column picks its best atom independently, so two columns may\\nchoose the same atom. With no_repeat = true the selection instead solves a\\nrectangular assignment problem — maximize the summed score subject to all\\nindices being distinct — via a shortest-augmenting-path method\\n( numerics::assignment_max). This is the mode identifiability theory wants\\n(a full-column-rank S) and the self-dictionary pipeline enforces it. #![allow(unused)] fn main() {\\nuse dcpd::dictionary::{normalize_atoms, select_atoms, Dictionary};\\nuse dcpd::Matrix; let dict = normalize_atoms(&Dictionary::new( Matrix::from_vec(2, 3, vec![1.0, 0.9, 0.0, 0.0, 0.1, 1.0])?, None,\\n)?);\\n// two identical columns compete for atom 0\\nlet b = Matrix::from_vec(2, 2, vec![1.0, 1.0, 0.0, 0.0])?; let greedy = select_atoms(&b, &dict, false, false)?;\\nassert_eq!(greedy.indices, vec![0, 0]); // collision allowed let injective = select_atoms(&b, &dict, true, false)?;\\nlet mut idx = injective.indices.clone();\\nidx.sort_unstable();\\nassert_eq!(idx, vec![0, 1]); // assignment resolves the collision Ok::<(), dcpd::Error>(()) }","breadcrumbs":"Constraining a factor to a dictionary » Repetition and assignment","id":"5","title":"Repetition and assignment"},"6":{"body":"For matrices, M = A (D S)ᵀ determines S and A uniquely (up to column\\npermutation) as soon as spark(D) > R: the spark is the size of the smallest\\nlinearly dependent column subset, so any R selected atoms are independent\\nand no second atom subset can span the same row space. For tensors the same\\ncondition transfers through the mode-2 unfolding. spark is NP-hard in\\ngeneral, but dictionaries here are small enough for the exhaustive check: #![allow(unused)] fn main() {\\nuse dcpd::numerics::{spark_bruteforce, SparkResult};\\nuse dcpd::Matrix; // e1, e2, e1+e2: every pair is independent, the triple is not\\nlet d = Matrix::from_vec(2, 3, vec![1.0, 0.0, 1.0, 0.0, 1.0, 1.0])?;\\nassert_eq!(spark_bruteforce(&d, 3)?, SparkResult::Spark(3)); // the identity has no dependent subset at all\\nassert_eq!(spark_bruteforce(&Matrix::identity(3), 3)?, SparkResult::ExceedsKmax); Ok::<(), dcpd::Error>(()) } The search enumerates column subsets level by level and refuses to run past C(d, k) = 10^6 subsets per level, returning a budget error instead of\\nsilently burning hours.","breadcrumbs":"Constraining a factor to a dictionary » When is the constrained model identifiable?","id":"6","title":"When is the constrained model identifiable?"},"7":{"body":"All solvers share one outer structure per iteration: update A by (nonneg)\\nleast squares, update C, then estimate B against the dictionary. They\\nstop when the relative cost change |E_i - E_{i-1}| / E_i drops below stop_tol (default 1e-4) or after max_outer_iters (default 1000). The\\nleast-squares updates solve the normal equations B (AᵀA ∘ CᵀC) = unfold(T, 2) (A kr C) through a Cholesky factorization of the small R x R Gram matrix (with a\\ntiny diagonal ridge as a fallback), and nonnegative variants run an\\nactive-set NNLS on the same Gram system.","breadcrumbs":"The solver family » The solver family","id":"7","title":"The solver family"},"8":{"body":"MPALS solves the unconstrained least squares for B, picks the closest atom\\nper column, and replaces B by the selected atoms. The projection can\\nincrease the cost, so there is no descent guarantee; the solver tracks the\\nbest iterate seen and returns that. In exchange it can hop between atoms\\nfreely, which turns out to be its strength. #![allow(unused)] fn main() {\\nuse dcpd::solvers::{init_random, mpals, report_rel_err, SolverConfig};\\nuse dcpd::dictionary::project;\\nuse dcpd::tensor::cpd_reconstruct; use dcpd::{Dictionary, Factors, Matrix, Selection}; let mut atoms = Matrix::from_fn(8, 12, |i, j| ((i * 5 + j * 11) % 13) as f64 - 6.0); atoms.normalize_cols(); let dict = Dictionary::new(atoms, None)?; let sel = Selection::new(vec![0, 5, 9], vec![1, 1, 1])?; let truth = Factors::new( init_random((6, 8, 5), 3, 1).a, project(&sel, &dict)?, init_random((6, 8, 5), 3, 2).c, )?; let t = cpd_reconstruct(&truth);\\n// starting *at* the solution, the solver recognizes the fixed point\\nlet cfg = SolverConfig { rank: 3, ..Default::default() };\\nlet report = mpals(&t, &cfg, &truth, &dict)?;\\nassert!(report.iterations <= 2);\\nassert!(report_rel_err(&t, &report)? < 1e-10);\\nassert_eq!(report.selection.unwrap().indices, vec![0, 5, 9]); Ok::<(), dcpd::Error>(()) }","breadcrumbs":"The solver family » MPALS — project hard","id":"8","title":"MPALS — project hard"},"9":{"body":"The smooth variant couples B to the current selection through a ridge term: B = (unfold(T,2)(A kr C) + λ·DS) (AᵀA ∘ CᵀC + λI)⁻¹ and multiplies λ by p (default 1.1; 1.5 works well for matrices) while ‖B - DS‖²_F > 0.01 ‖B‖²_F. As λ grows, B = DS + O(1/λ) — the update\\ncollapses onto the projection, the selection freezes, and the remaining A, C updates descend monotonically. A and C always see the projected B = DS, and the final B is exactly the selected atoms. #![allow(unused)] fn main() {\\nuse dcpd::solvers::smpals_b_update;\\nuse dcpd::solvers::init_random; let rhs = init_random((1, 8, 1), 3, 5).b; // any 8 x 3 matrices will do\\nlet b_sel = init_random((1, 8, 1), 3, 6).b;\\nlet gram = init_random((1, 6, 1), 3, 7).b.gram(); // the large-lambda limit returns the selected atoms\\nlet b = smpals_b_update(&rhs, &gram, &b_sel, 1e12)?;\\nlet rel = b.add_scaled(-1.0, &b_sel).frob_norm() / b_sel.frob_norm();\\nassert!(rel < 1e-6); Ok::<(), dcpd::Error>(()) }","breadcrumbs":"The solver family » SMPALS — anneal the projection","id":"9","title":"SMPALS — anneal the projection"}},"docInfo":{"0":{"body":297,"breadcrumbs":2,"title":1},"1":{"body":80,"breadcrumbs":8,"title":4},"10":{"body":56,"breadcrumbs":7,"title":5},"11":{"body":202,"breadcrumbs":6,"title":4},"12":{"body":54,"breadcrumbs":6,"title":3},"13":{"body":58,"breadcrumbs":5,"title":2},"14":{"body":233,"breadcrumbs":5,"title":2},"15":{"body":33,"breadcrumbs":4,"title":2},"16":{"body":144,"breadcrumbs":4,"title":2},"17":{"body":153,"breadcrumbs":3,"title":1},"18":{"body":166,"breadcrumbs":5,"title":3},"19":{"body":35,"breadcrumbs":8,"title":4},"2":{"body":139,"breadcrumbs":5,"title":1},"20":{"body":57,"breadcrumbs":6,"title":2},"21":{"body":60,"breadcrumbs":5,"title":1},"22":{"body":60,"breadcrumbs":5,"title":1},"23":{"body":47,"breadcrumbs":5,"title":1},"24":{"body":28,"breadcrumbs":5,"title":1},"3":{"body":70,"breadcrumbs":7,"title":3},"4":{"body":191,"breadcrumbs":6,"title":3},"5":{"body":104,"breadcrumbs":5,"title":2},"6":{"body":105,"breadcrumbs":6,"title":3},"7":{"body":67,"breadcrumbs":4,"title":2},"8":{"body":116,"breadcrumbs":5,"title":3},"9":{"body":104,"breadcrumbs":5,"title":3}},"length":25},"lang":"English"}}'));